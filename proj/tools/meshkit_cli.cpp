// meshkit command-line front end. Machine output goes to stdout, diagnostics
// to stderr. Exit codes: 0 success, 1 verification failure, 2 usage or parse
// error.

#include "meshkit/dsl.hpp"
#include "meshkit/enumerate.hpp"
#include "meshkit/fixtures.hpp"
#include "meshkit/matcher.hpp"
#include "meshkit/preimage.hpp"
#include "meshkit/sort_ops.hpp"
#include "meshkit/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace meshkit;

namespace {

constexpr int kMaxLength = 12;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  unsigned workers = 1;
  std::string fixtures;
};

std::pair<int, int> parse_lengths(const std::string& text) {
  const auto dots = text.find("..");
  int a = 0;
  int b = 0;
  try {
    if (dots == std::string::npos) {
      a = b = std::stoi(text);
    } else {
      a = std::stoi(text.substr(0, dots));
      b = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw UsageError("bad length range '" + text + "', expected a..b");
  }
  if (a < 0 || b < a || b > kMaxLength) {
    throw UsageError("length range must satisfy 0 <= a <= b <= " + std::to_string(kMaxLength));
  }
  return {a, b};
}

std::vector<Pattern> parse_patterns(const std::vector<std::string>& texts) {
  std::vector<Pattern> out;
  for (const auto& t : texts) {
    // Upper-case words name fixture sets.
    if (!t.empty() && std::isupper(static_cast<unsigned char>(t[0]))) {
      const auto set = fixture(t);
      out.insert(out.end(), set.begin(), set.end());
    } else {
      out.push_back(parse_pattern(t));
    }
  }
  return out;
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

int run(int argc, char** argv) {
  CLI::App app{"meshkit: permutation patterns, sorting operators and exhaustive verification.\n"
               "Patterns use the text syntax word|sh{(i,j),...}|mark{...}>=m|dec{...}avoids(q);\n"
               "quote them in the shell, e.g. '132|sh{(0,2),(1,2)}'. Pattern lists also accept\n"
               "fixture names such as WEST2."};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "one JSON object per output line");
  app.add_option("--workers", opt.workers, "worker threads for enumeration")->check(CLI::Range(1u, 1024u));
  app.add_option("--fixtures", opt.fixtures, "directory of *.pat fixture files (overrides MESHKIT_FIXTURES)");

  std::function<int()> action;

  // match
  std::string pat_text;
  std::string perm_text;
  auto* match = app.add_subcommand("match", "list occurrences of a pattern in a permutation");
  match->add_option("pattern", pat_text)->required();
  match->add_option("perm", perm_text)->required();
  match->callback([&] {
    action = [&] {
      const Pattern pat = parse_pattern(pat_text);
      const Permutation p = Permutation::parse(perm_text);
      const auto occs = occurrences(pat, p);
      for (const auto& o : occs) {
        emit(opt, {{"pattern", print(pat)}, {"perm", p.str()}, {"positions", o.positions}, {"values", o.values}},
             "positions " + join(o.positions) + "  values " + join(o.values));
      }
      if (occs.empty() && !opt.json) std::cout << "no occurrences\n";
      return 0;
    };
  });

  // avoids
  std::vector<std::string> avoid_args;
  auto* avoids = app.add_subcommand("avoids", "test whether a permutation avoids every given pattern");
  avoids->add_option("args", avoid_args, "<pattern>... <perm>")->required()->expected(2, -1);
  avoids->callback([&] {
    action = [&] {
      const Permutation p = Permutation::parse(avoid_args.back());
      avoid_args.pop_back();
      const auto pats = parse_patterns(avoid_args);
      const bool ok = avoids_all(pats, p);
      std::vector<std::string> printed;
      for (const auto& q : pats) printed.push_back(print(q));
      emit(opt, {{"perm", p.str()}, {"patterns", printed}, {"avoids", ok}}, ok ? "avoids" : "contains");
      return 0;
    };
  });

  // enumerate
  int length = 0;
  std::vector<std::string> avoiding;
  auto* enumerate = app.add_subcommand("enumerate", "stream Av_n(patterns) in lexicographic order");
  enumerate->add_option("--length", length)->required()->check(CLI::Range(0, kMaxLength));
  enumerate->add_option("--avoiding", avoiding)->required();
  enumerate->callback([&] {
    action = [&] {
      const auto pats = parse_patterns(avoiding);
      for_each_avoider(
          length, pats, [&](const Permutation& p) { emit(opt, {{"perm", p.str()}}, p.str()); }, kMaxLength);
      return 0;
    };
  });

  // count
  std::string lengths = "1..8";
  auto* count = app.add_subcommand("count", "count Av_n(patterns) for each n in a range");
  count->add_option("--lengths", lengths, "a..b");
  count->add_option("--avoiding", avoiding)->required();
  count->callback([&] {
    action = [&] {
      const auto [a, b] = parse_lengths(lengths);
      const auto pats = parse_patterns(avoiding);
      for (int n = a; n <= b; ++n) {
        const auto c = count_avoiders(n, pats, opt.workers);
        emit(opt, {{"n", n}, {"count", c}}, std::to_string(n) + " " + std::to_string(c));
      }
      return 0;
    };
  });

  // sort
  std::string op_text = "stack";
  int passes = 1;
  auto* sort = app.add_subcommand("sort", "apply a sorting operator");
  sort->add_option("--op", op_text)->check(CLI::IsMember({"stack", "bubble"}));
  sort->add_option("--passes", passes)->check(CLI::NonNegativeNumber);
  sort->add_option("perm", perm_text)->required();
  sort->callback([&] {
    action = [&] {
      const Permutation p = Permutation::parse(perm_text);
      const Permutation out = apply_operator(parse_sort_operator(op_text), p, passes);
      emit(opt, {{"op", op_text}, {"passes", passes}, {"input", p.str()}, {"output", out.str()}}, out.str());
      return 0;
    };
  });

  // sortable-count
  auto* sc = app.add_subcommand("sortable-count", "count permutations sorted by k passes");
  sc->add_option("--op", op_text)->check(CLI::IsMember({"stack", "bubble"}));
  sc->add_option("--passes", passes)->check(CLI::NonNegativeNumber);
  sc->add_option("--lengths", lengths, "a..b");
  sc->callback([&] {
    action = [&] {
      const auto [a, b] = parse_lengths(lengths);
      const SortOperator op = parse_sort_operator(op_text);
      for (int n = a; n <= b; ++n) {
        const auto c = count_permutations_if(
            n, [&](std::span<const int> w) { return sorted_by(op, w, passes); }, opt.workers);
        emit(opt, {{"op", op_text}, {"passes", passes}, {"n", n}, {"count", c}},
             std::to_string(n) + " " + std::to_string(c));
      }
      return 0;
    };
  });

  // preimage
  auto* pre = app.add_subcommand("preimage", "derive a preimage basis for a classical pattern");
  pre->add_option("--op", op_text)->check(CLI::IsMember({"stack", "bubble"}));
  pre->add_option("pattern", pat_text)->required();
  pre->callback([&] {
    action = [&] {
      const auto basis = preimage_basis(parse_sort_operator(op_text), parse_pattern(pat_text));
      for (const auto& m : basis.patterns) {
        if (opt.json) {
          emit(opt,
               {{"target", basis.target.word().str()}, {"op", op_text}, {"pattern", print(m)},
                {"candidate", m.word().str()}},
               "");
        } else {
          std::cout << print(m) << "\n# candidate " << m.word().str() << "\n";
        }
      }
      return 0;
    };
  });

  // expand
  auto* expand = app.add_subcommand("expand", "replace marked regions by explicit entries");
  expand->add_option("pattern", pat_text)->required();
  expand->callback([&] {
    action = [&] {
      for (const auto& m : expand_marks(parse_pattern(pat_text))) emit(opt, {{"pattern", print(m)}}, print(m));
      return 0;
    };
  });

  // verify
  std::string suite;
  int n_max = -1;
  auto* verify = app.add_subcommand("verify", "run a verification suite, or 'all'");
  verify->add_option("suite", suite)->required();
  verify->add_option("--n-max", n_max, "largest length to check (suite default otherwise)")
      ->check(CLI::Range(0, kMaxLength));
  verify->callback([&] {
    action = [&] {
      std::vector<const SuiteInfo*> chosen;
      if (suite == "all") {
        for (const auto& s : suites()) chosen.push_back(&s);
      } else {
        try {
          chosen.push_back(&find_suite(suite));
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }
      bool all_pass = true;
      for (const auto* s : chosen) {
        const int n = n_max >= 0 ? n_max : s->default_n_max;
        const auto rep = s->run(n, opt.workers);
        std::cout << (opt.json ? format_json_lines(rep) : format_text(rep)) << std::flush;
        all_pass = all_pass && rep.pass;
      }
      return all_pass ? 0 : 1;
    };
  });

  // render
  auto* render = app.add_subcommand("render", "draw a pattern as a grid");
  render->add_option("pattern", pat_text)->required();
  render->callback([&] {
    action = [&] {
      const Pattern pat = parse_pattern(pat_text);
      const std::string pic = render_ascii(pat);
      if (opt.json) {
        emit(opt, {{"pattern", print(pat)}, {"render", pic}}, "");
      } else {
        std::cout << pic;
      }
      return 0;
    };
  });

  // symmetries
  auto* sym = app.add_subcommand("symmetries", "list the images under the eight symmetries");
  sym->add_option("pattern", pat_text)->required();
  sym->callback([&] {
    action = [&] {
      const Pattern pat = parse_pattern(pat_text);
      for (const auto& s : all_symmetries()) {
        const std::string img = print(apply_symmetry_pattern(s, pat));
        emit(opt, {{"symmetry", s.name()}, {"pattern", img}}, s.name() + " " + img);
      }
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  if (!opt.fixtures.empty()) setenv("MESHKIT_FIXTURES", opt.fixtures.c_str(), 1);
  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const FixtureError& e) {
    std::cerr << "fixture error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
