#include "meshkit/sort_ops.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace meshkit {

std::string_view to_string(SortOperator op) { return op == SortOperator::Stack ? "stack" : "bubble"; }

SortOperator parse_sort_operator(std::string_view name) {
  if (name == "stack") return SortOperator::Stack;
  if (name == "bubble") return SortOperator::Bubble;
  throw std::invalid_argument("unknown sort operator '" + std::string(name) + "'");
}

namespace {

// Both passes are written once over positions; the output records which input
// position each entry came from.
void stack_pass(std::span<const int> in, std::span<int> out_pos) {
  std::vector<int> stack;
  stack.reserve(in.size());
  std::size_t w = 0;
  for (std::size_t i = 0; i < in.size(); ++i) {
    while (!stack.empty() && in[static_cast<std::size_t>(stack.back())] < in[i]) {
      out_pos[w++] = stack.back();
      stack.pop_back();
    }
    stack.push_back(static_cast<int>(i));
  }
  while (!stack.empty()) {
    out_pos[w++] = stack.back();
    stack.pop_back();
  }
}

void bubble_pass(std::span<const int> in, std::span<int> out_pos) {
  for (std::size_t i = 0; i < in.size(); ++i) out_pos[i] = static_cast<int>(i);
  for (std::size_t i = 0; i + 1 < in.size(); ++i) {
    if (in[static_cast<std::size_t>(out_pos[i])] > in[static_cast<std::size_t>(out_pos[i + 1])]) {
      std::swap(out_pos[i], out_pos[i + 1]);
    }
  }
}

SortTrace make_trace(const Permutation& p, void (*pass)(std::span<const int>, std::span<int>)) {
  std::vector<int> pos(static_cast<std::size_t>(p.size()));
  pass(p.word(), pos);
  std::vector<int> out(pos.size());
  std::vector<int> source(pos.size());
  for (std::size_t i = 0; i < pos.size(); ++i) {
    out[i] = p.word()[static_cast<std::size_t>(pos[i])];
    source[i] = pos[i] + 1;
  }
  return {Permutation(std::move(out)), std::move(source)};
}

}  // namespace

void stack_sort_into(std::span<const int> in, std::span<int> out) {
  std::vector<int> stack;
  stack.reserve(in.size());
  std::size_t w = 0;
  for (int x : in) {
    while (!stack.empty() && stack.back() < x) {
      out[w++] = stack.back();
      stack.pop_back();
    }
    stack.push_back(x);
  }
  while (!stack.empty()) {
    out[w++] = stack.back();
    stack.pop_back();
  }
}

void bubble_into(std::span<const int> in, std::span<int> out) {
  std::copy(in.begin(), in.end(), out.begin());
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    if (out[i] > out[i + 1]) std::swap(out[i], out[i + 1]);
  }
}

Permutation stack_sort_once(const Permutation& p) { return trace_stack_sort(p).output; }
Permutation bubble_once(const Permutation& p) { return trace_bubble(p).output; }

Permutation stack_sort_k(const Permutation& p, int k) { return apply_operator(SortOperator::Stack, p, k); }
Permutation bubble_k(const Permutation& p, int k) { return apply_operator(SortOperator::Bubble, p, k); }

Permutation apply_operator(SortOperator op, const Permutation& p, int passes) {
  if (passes < 0) throw std::invalid_argument("negative number of passes");
  std::vector<int> cur(p.values());
  std::vector<int> next(cur.size());
  for (int k = 0; k < passes; ++k) {
    if (op == SortOperator::Stack) {
      stack_sort_into(cur, next);
    } else {
      bubble_into(cur, next);
    }
    cur.swap(next);
  }
  return Permutation(std::move(cur));
}

bool sorted_by(SortOperator op, std::span<const int> word, int passes) {
  std::vector<int> cur(word.begin(), word.end());
  std::vector<int> next(cur.size());
  auto is_id = [&] {
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
  };
  for (int k = 0; k < passes; ++k) {
    if (is_id()) return true;
    if (op == SortOperator::Stack) {
      stack_sort_into(cur, next);
    } else {
      bubble_into(cur, next);
    }
    cur.swap(next);
  }
  return is_id();
}

bool is_west_k_sortable(const Permutation& p, int k) { return sorted_by(SortOperator::Stack, p.word(), k); }

SortTrace trace_stack_sort(const Permutation& p) { return make_trace(p, &stack_pass); }
SortTrace trace_bubble(const Permutation& p) { return make_trace(p, &bubble_pass); }

SortTrace trace(SortOperator op, const Permutation& p) {
  return op == SortOperator::Stack ? trace_stack_sort(p) : trace_bubble(p);
}

}  // namespace meshkit
