#include "meshkit/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

namespace meshkit {

namespace {

struct Word {
  std::vector<int> values;
  std::vector<int> barred;  // 1-based positions
  SourceSpan span;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedPattern parse_top() {
    skip_ws();
    ParsedPattern out = parse_any(/*allow_bars=*/true);
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input", pos_, text_.size());
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t start, std::size_t end) const {
    throw ParseError(msg, SourceSpan{start, std::max(start, end)});
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' " + what + ", found end of input", pos_, pos_);
    if (text_[pos_] != c) fail(std::string("expected '") + c + "' " + what, pos_, pos_ + 1);
    ++pos_;
  }

  bool accept_keyword(std::string_view kw) {
    skip_ws();
    if (text_.substr(pos_, kw.size()) == kw) {
      pos_ += kw.size();
      return true;
    }
    return false;
  }

  int parse_int(std::size_t* start_out = nullptr) {
    skip_ws();
    const std::size_t start = pos_;
    if (start_out) *start_out = start;
    std::size_t p = pos_;
    if (p < text_.size() && (text_[p] == '-' || text_[p] == '+')) ++p;
    while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
    int value = 0;
    const char* first = text_.data() + start + (start < text_.size() && text_[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text_.data() + p, value);
    if (ec != std::errc{} || ptr != text_.data() + p) fail("expected an integer", start, std::max(p, start + 1));
    pos_ = p;
    return value;
  }

  Word parse_word(bool allow_bars) {
    skip_ws();
    Word w;
    w.span.start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      if (peek() == ']') {
        ++pos_;
      } else {
        for (;;) {
          w.values.push_back(parse_int());
          if (peek() == '\'') {
            if (!allow_bars) fail("bars are not allowed here", pos_, pos_ + 1);
            ++pos_;
            w.barred.push_back(static_cast<int>(w.values.size()));
          }
          if (peek() == ',') {
            ++pos_;
            continue;
          }
          expect(']', "to close the word");
          break;
        }
      }
    } else {
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '\'')) {
        const char c = text_[pos_];
        if (c == '\'') {
          if (w.values.empty()) fail("a bar must follow a letter", pos_, pos_ + 1);
          if (!allow_bars) fail("bars are not allowed here", pos_, pos_ + 1);
          if (!w.barred.empty() && w.barred.back() == static_cast<int>(w.values.size())) {
            fail("letter barred twice", pos_, pos_ + 1);
          }
          w.barred.push_back(static_cast<int>(w.values.size()));
        } else {
          if (c == '0') fail("0 is not a letter of a permutation", pos_, pos_ + 1);
          w.values.push_back(c - '0');
        }
        ++pos_;
      }
      if (w.values.empty()) fail("expected a pattern word", pos_, pos_ + 1);
    }
    w.span.end = pos_;
    if (!is_permutation_word(w.values)) fail("word is not a permutation of 1..k", w.span.start, w.span.end);
    return w;
  }

  BoxSet parse_boxset(int k) {
    expect('{', "to open a box set");
    std::vector<Box> boxes;
    for (;;) {
      skip_ws();
      const std::size_t start = pos_;
      expect('(', "to open a box");
      Box b;
      b.col = parse_int();
      expect(',', "between box coordinates");
      b.row = parse_int();
      expect(')', "to close a box");
      if (b.col < 0 || b.col > k || b.row < 0 || b.row > k) {
        fail("box outside the grid of a length-" + std::to_string(k) + " pattern", start, pos_);
      }
      boxes.push_back(b);
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect('}', "to close a box set");
      break;
    }
    return make_box_set(std::move(boxes));
  }

  Pattern parse_plain() {
    ParsedPattern p = parse_any(/*allow_bars=*/false);
    return std::get<Pattern>(std::move(p));
  }

  ParsedPattern parse_any(bool allow_bars) {
    Word w = parse_word(allow_bars);
    Permutation word(w.values);
    if (!w.barred.empty()) {
      if (peek() == '|') fail("barred patterns take no clauses", pos_, pos_ + 1);
      if (static_cast<int>(w.barred.size()) == word.size()) {
        fail("a barred pattern needs an unbarred letter", w.span.start, w.span.end);
      }
      return BarredPattern(std::move(word), std::move(w.barred));
    }
    const int k = word.size();
    std::vector<RegionConstraint> constraints;
    while (peek() == '|') {
      ++pos_;
      skip_ws();
      const std::size_t clause_start = pos_;
      if (accept_keyword("sh")) {
        constraints.push_back(RegionConstraint::shaded(parse_boxset(k)));
      } else if (accept_keyword("mark")) {
        BoxSet boxes = parse_boxset(k);
        skip_ws();
        if (!accept_keyword(">=")) fail("expected '>=' after a marked box set", pos_, pos_ + 1);
        std::size_t count_start = 0;
        const int count = parse_int(&count_start);
        if (count < 1) fail("mark count must be at least 1", count_start, pos_);
        constraints.push_back(RegionConstraint::at_least(std::move(boxes), count));
      } else if (accept_keyword("dec")) {
        BoxSet boxes = parse_boxset(k);
        if (!accept_keyword("avoids")) fail("expected 'avoids' after a decorated box set", pos_, pos_ + 1);
        expect('(', "to open the avoided pattern");
        Pattern inner = parse_plain();
        expect(')', "to close the avoided pattern");
        constraints.push_back(RegionConstraint::avoids(std::move(boxes), std::move(inner)));
      } else {
        std::size_t end = clause_start;
        while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
        fail("unknown clause; expected sh, mark or dec", clause_start, std::max(end, clause_start + 1));
      }
    }
    return Pattern(std::move(word), std::move(constraints));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string print_word(const Permutation& w, const std::vector<int>& barred = {}) {
  auto bar = [&](int pos) { return std::binary_search(barred.begin(), barred.end(), pos); };
  std::string out;
  const int k = w.size();
  if (k >= 1 && k <= 9) {
    for (int i = 1; i <= k; ++i) {
      out.push_back(static_cast<char>('0' + w(i)));
      if (bar(i)) out.push_back('\'');
    }
    return out;
  }
  out.push_back('[');
  for (int i = 1; i <= k; ++i) {
    if (i > 1) out.push_back(',');
    out += std::to_string(w(i));
    if (bar(i)) out.push_back('\'');
  }
  out.push_back(']');
  return out;
}

std::string print_boxes(const BoxSet& boxes) {
  std::string out = "{";
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (i) out.push_back(',');
    out += "(" + std::to_string(boxes[i].col) + "," + std::to_string(boxes[i].row) + ")";
  }
  out.push_back('}');
  return out;
}

}  // namespace

ParsedPattern parse(std::string_view text) { return Parser(text).parse_top(); }

Pattern parse_pattern(std::string_view text) {
  ParsedPattern p = parse(text);
  if (auto* pat = std::get_if<Pattern>(&p)) return std::move(*pat);
  const auto& barred = std::get<BarredPattern>(p);
  if (barred.barred().size() != 1) {
    throw ParseError("barred pattern with more than one bar has no pattern form", SourceSpan{0, text.size()});
  }
  return barred_to_mesh(barred);
}

BarredPattern parse_barred(std::string_view text) {
  ParsedPattern p = parse(text);
  if (auto* b = std::get_if<BarredPattern>(&p)) return std::move(*b);
  throw ParseError("expected a barred pattern", SourceSpan{0, text.size()});
}

std::string print(const Pattern& pat) {
  std::string out = print_word(pat.word());
  for (const auto& c : pat.constraints()) {
    switch (c.kind()) {
      case ConstraintKind::Shaded:
        out += "|sh" + print_boxes(c.boxes());
        break;
      case ConstraintKind::AtLeast:
        out += "|mark" + print_boxes(c.boxes()) + ">=" + std::to_string(c.count());
        break;
      case ConstraintKind::Avoids:
        out += "|dec" + print_boxes(c.boxes()) + "avoids(" + print(c.avoided()) + ")";
        break;
    }
  }
  return out;
}

std::string print(const BarredPattern& pat) { return print_word(pat.word(), pat.barred()); }

std::string print(const ParsedPattern& pat) {
  return std::visit([](const auto& p) { return print(p); }, pat);
}

std::string render_ascii(const Pattern& pat) {
  const int k = pat.length();
  if (k > 20) throw std::invalid_argument("render_ascii: pattern longer than 20");

  // Cell content per box; later constraints do not overwrite shading.
  std::vector<std::string> cell(static_cast<std::size_t>((k + 1) * (k + 1)), " ");
  auto at = [&](Box b) -> std::string& { return cell[static_cast<std::size_t>(b.row * (k + 1) + b.col)]; };
  std::vector<std::string> legend;
  char letter = 'a';
  for (const auto& c : pat.constraints()) {
    std::string mark;
    switch (c.kind()) {
      case ConstraintKind::Shaded:
        mark = "▒";
        break;
      case ConstraintKind::AtLeast:
        mark = c.count() <= 9 ? std::string(1, static_cast<char>('0' + c.count())) : "+";
        break;
      case ConstraintKind::Avoids:
        mark = std::string(1, letter);
        legend.push_back(std::string(1, letter) + ": avoids " + print(c.avoided()));
        letter = letter == 'z' ? 'z' : static_cast<char>(letter + 1);
        break;
    }
    for (const Box& b : c.boxes()) {
      if (at(b) == " ") at(b) = mark;
    }
  }

  std::string out;
  for (int y = 2 * k; y >= 0; --y) {
    const bool box_row = y % 2 == 0;
    for (int x = 0; x <= 2 * k; ++x) {
      const bool box_col = x % 2 == 0;
      if (box_row && box_col) {
        out += at(Box{x / 2, y / 2});
      } else if (box_row) {
        out += "│";
      } else if (box_col) {
        out += "─";
      } else {
        out += pat.word()((x + 1) / 2) == (y + 1) / 2 ? "●" : "┼";
      }
    }
    out.push_back('\n');
  }
  for (const auto& line : legend) out += line + "\n";
  return out;
}

}  // namespace meshkit
