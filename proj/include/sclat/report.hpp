#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "sclat/lattice.hpp"

namespace sclat {

struct LawResult {
  std::string law;
  bool pass = true;
  std::vector<Elem> witness;  // first counterexample, empty on pass
};

struct Report {
  std::vector<LawResult> lines;

  bool all_pass() const {
    return std::all_of(lines.begin(), lines.end(), [](const LawResult& r) { return r.pass; });
  }

  /// True when every line whose name is in `laws` passes.
  bool passes(std::initializer_list<std::string_view> laws) const {
    for (auto name : laws) {
      const LawResult* r = find(name);
      if (r == nullptr || !r->pass) return false;
    }
    return true;
  }

  const LawResult* find(std::string_view law) const {
    for (const auto& r : lines)
      if (r.law == law) return &r;
    return nullptr;
  }

  const LawResult& at(std::string_view law) const {
    if (const LawResult* r = find(law)) return *r;
    throw Error(ErrorKind::InvalidInput, "no report line for " + std::string(law));
  }

  void append(const Report& other) { lines.insert(lines.end(), other.lines.begin(), other.lines.end()); }
};

namespace detail {

/// Accumulates one report line; keeps the first witness only.
class LawCheck {
 public:
  explicit LawCheck(std::string law) { res_.law = std::move(law); }

  bool ok() const { return res_.pass; }

  void require(bool cond, std::initializer_list<Elem> witness) {
    if (cond || !res_.pass) return;
    res_.pass = false;
    res_.witness.assign(witness.begin(), witness.end());
  }

  void fail(std::vector<Elem> witness) {
    if (!res_.pass) return;
    res_.pass = false;
    res_.witness = std::move(witness);
  }

  LawResult take() { return std::move(res_); }

 private:
  LawResult res_;
};

}  // namespace detail
}  // namespace sclat
