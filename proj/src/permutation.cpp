#include "meshkit/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace meshkit {

bool is_permutation_word(std::span<const int> word) {
  const auto n = word.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : word) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  if (!is_permutation_word(word_)) {
    throw std::invalid_argument("not a permutation of 1..n");
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w), Unchecked{});
}

Permutation Permutation::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  std::vector<int> w;
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("unterminated '[' in permutation");
    std::string_view body(s.data() + 1, s.size() - 2);
    while (!body.empty()) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
      if (ec != std::errc{}) throw std::invalid_argument("bad integer in permutation");
      w.push_back(v);
      body.remove_prefix(static_cast<std::size_t>(ptr - body.data()));
      if (body.empty()) break;
      if (body.front() != ',') throw std::invalid_argument("expected ',' in permutation");
      body.remove_prefix(1);
      if (body.empty()) throw std::invalid_argument("trailing ',' in permutation");
    }
  } else {
    for (char c : s) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad digit in permutation");
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) {
    inv[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv), Unchecked{});
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (word_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::string Permutation::str() const {
  std::string out;
  if (!word_.empty() && word_.size() <= 9) {
    for (int v : word_) out.push_back(static_cast<char>('0' + v));
    return out;
  }
  out.push_back('[');
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(word_[i]);
  }
  out.push_back(']');
  return out;
}

std::string to_string(const Permutation& p) { return p.str(); }

Permutation standardize(std::span<const int> seq) {
  std::vector<int> order(seq.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return seq[static_cast<std::size_t>(a)] < seq[static_cast<std::size_t>(b)]; });
  std::vector<int> out(seq.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && seq[static_cast<std::size_t>(order[r])] == seq[static_cast<std::size_t>(order[r - 1])]) {
      throw std::invalid_argument("standardize: duplicate entries");
    }
    out[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(out), Permutation::Unchecked{});
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  std::vector<int> ys;
  ys.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i > 0 && points_[i].x == points_[i - 1].x) {
      throw std::invalid_argument("point set: repeated x-coordinate");
    }
    ys.push_back(points_[i].y);
  }
  std::sort(ys.begin(), ys.end());
  if (std::adjacent_find(ys.begin(), ys.end()) != ys.end()) {
    throw std::invalid_argument("point set: repeated y-coordinate");
  }
}

Permutation PointSet::standardized() const {
  std::vector<int> ys;
  ys.reserve(points_.size());
  for (const auto& pt : points_) ys.push_back(pt.y);
  return standardize(ys);
}

PointSet graph(const Permutation& p) {
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) pts.push_back({i, p(i)});
  return PointSet(std::move(pts));
}

std::vector<std::pair<int, int>> inversions(const Permutation& p) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) {
      if (p(i) > p(j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::int64_t inversion_count(std::span<const int> word) {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = i + 1; j < word.size(); ++j) {
      if (word[i] > word[j]) ++count;
    }
  }
  return count;
}

// ---------------------------------------------------------------------------

Point Symmetry::apply(Point pt, int m) const {
  if (transpose) std::swap(pt.x, pt.y);
  if (reverse) pt.x = m + 1 - pt.x;
  if (complement) pt.y = m + 1 - pt.y;
  return pt;
}

std::string Symmetry::name() const {
  std::string s;
  if (transpose) s += 'i';
  if (reverse) s += 'r';
  if (complement) s += 'c';
  return s.empty() ? "id" : s;
}

const std::array<Symmetry, 8>& all_symmetries() {
  static const std::array<Symmetry, 8> kAll = [] {
    std::array<Symmetry, 8> a{};
    for (int bits = 0; bits < 8; ++bits) {
      a[static_cast<std::size_t>(bits)] = Symmetry{(bits & 4) != 0, (bits & 1) != 0, (bits & 2) != 0};
    }
    return a;
  }();
  return kAll;
}

namespace {

// (1,2) in the 4x4 square lies on none of the four mirror axes, so its image
// identifies a symmetry uniquely.
constexpr Point kProbe{1, 2};
constexpr int kProbeSize = 4;

Symmetry from_probe_image(Point image) {
  for (const auto& s : all_symmetries()) {
    if (s.apply(kProbe, kProbeSize) == image) return s;
  }
  throw std::logic_error("symmetry probe image not in orbit");
}

}  // namespace

Symmetry compose(Symmetry a, Symmetry b) {
  return from_probe_image(a.apply(b.apply(kProbe, kProbeSize), kProbeSize));
}

Symmetry inverse(Symmetry s) {
  for (const auto& t : all_symmetries()) {
    if (compose(t, s) == Symmetry::identity()) return t;
  }
  throw std::logic_error("symmetry without inverse");
}

Permutation apply_symmetry(Symmetry s, const Permutation& p) {
  const int n = p.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const Point q = s.apply({i, p(i)}, n);
    out[static_cast<std::size_t>(q.x - 1)] = q.y;
  }
  return Permutation(std::move(out));
}

// ---------------------------------------------------------------------------

std::vector<Interval> nontrivial_intervals(const Permutation& p) {
  std::vector<Interval> out;
  const int n = p.size();
  for (int a = 1; a <= n; ++a) {
    int lo = p(a);
    int hi = p(a);
    for (int b = a + 1; b <= n; ++b) {
      lo = std::min(lo, p(b));
      hi = std::max(hi, p(b));
      if (hi - lo == b - a && !(a == 1 && b == n)) out.push_back({a, b, lo, hi});
    }
  }
  return out;
}

bool is_simple(std::span<const int> word) {
  const auto n = word.size();
  for (std::size_t a = 0; a < n; ++a) {
    int lo = word[a];
    int hi = word[a];
    for (std::size_t b = a + 1; b < n; ++b) {
      lo = std::min(lo, word[b]);
      hi = std::max(hi, word[b]);
      if (static_cast<std::size_t>(hi - lo) == b - a && !(a == 0 && b == n - 1)) return false;
    }
  }
  return true;
}

bool is_simple(const Permutation& p) { return is_simple(p.word()); }

}  // namespace meshkit
