// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <cstdlib>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bvsigma/function.hpp"
#include "bvsigma/polyline.hpp"

namespace bvsigma {

/// Variation of f along the sigma-points met by the curve, in traversal
/// order. Interior sigma-points on segments are picked up automatically.
/// Every polyline vertex must belong to the domain of f.
inline double cvar(const FiniteFunction& f, const Polyline& poly) {
  for (const Point& v : poly.vertices()) {
    if (!f.domain().contains(v))
      throw ValidationError("polyline vertex " + v.str() + " outside the function domain");
  }
  const std::vector<Point> hits = sigma_hits(poly, f.domain());
  double total = 0.0;
  for (size_t i = 0; i + 1 < hits.size(); ++i) {
    total += (f.value_at(hits[i + 1]) - f.value_at(hits[i])).modulus();
  }
  return total;
}

enum class SearchMode { exhaustive, branch_bound, heuristic };

inline std::string to_string(SearchMode m) {
  switch (m) {
    case SearchMode::exhaustive: return "exact";
    case SearchMode::branch_bound: return "bnb";
    case SearchMode::heuristic: return "heuristic";
  }
  return "?";
}

/// One term of the variation supremum, reproducible from its vertex list.
struct NormCertificate {
  std::vector<Point> vertex_list;
  double cvar_value = 0.0;
  int vf = 1;
  Line witness_line;
  double product = 0.0;
};

struct NormResult {
  double lower = 0.0;
  std::optional<double> upper;  // empty means "unknown"
  bool exact = false;
  NormCertificate certificate;
  SearchMode mode = SearchMode::branch_bound;
  int list_budget = 0;
};

struct SearchOptions {
  SearchMode mode = SearchMode::branch_bound;
  int list_budget = 0;                 // 0: default 2|sigma|
  unsigned long long node_limit = 0;   // 0: env BVSIGMA_NODE_LIMIT or 5e7
  int threads = 1;                     // <1: hardware concurrency
};

inline unsigned long long default_node_limit() {
  if (const char* env = std::getenv("BVSIGMA_NODE_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 50'000'000ULL;
}

/// Certificate for one explicit list: product = cvar(f, Pi(list)) * rho.
/// Always a valid lower bound for var(f, sigma). Lists with fewer than two
/// distinct consecutive points yield product 0.
inline NormCertificate var_lower(const FiniteFunction& f, const std::vector<Point>& list) {
  NormCertificate cert;
  if (!f.domain().empty()) {
    cert.witness_line = Line(Integer(0), Integer(1), f.domain()[0].y);
  }
  if (list.empty()) return cert;
  for (const Point& p : list) {
    if (!f.domain().contains(p))
      throw ValidationError("list point " + p.str() + " outside the function domain");
  }
  Polyline poly(list);
  cert.vertex_list = poly.vertices();
  if (poly.size() < 2) return cert;
  cert.cvar_value = cvar(f, poly);
  VfResult vf = variation_factor(poly);
  cert.vf = vf.vf;
  cert.witness_line = vf.witness_line;
  cert.product = cert.cvar_value / vf.vf;
  return cert;
}

namespace detail {

/// Shared, immutable state for the word search over one function:
/// the candidate-line arrangement of sigma (deduplicated by side-sign
/// pattern) and the per-segment variation costs.
class SearchContext {
 public:
  explicit SearchContext(const FiniteFunction& f) : f_(f), n_(f.domain().size()) {
    build_lines();
    build_hitcosts();
  }

  const FiniteFunction& function() const { return f_; }
  size_t n_points() const { return n_; }
  size_t n_lines() const { return n_lines_; }
  double max_hitcost() const { return max_hitcost_; }
  double hitcost(size_t i, size_t j) const { return hitcost_[i * n_ + j]; }
  const int8_t* sign_row(size_t point) const { return sign_.data() + point * n_lines_; }

 private:
  void build_lines() {
    const auto& pts = f_.domain().points();
    // Deduplicate candidate lines by their side-sign pattern over sigma;
    // lines strictly missing every point on one side can never be maximal.
    std::map<std::vector<int8_t>, bool> seen;
    std::vector<std::vector<int8_t>> cols;
    for (const auto& slab : candidate_slabs(pts)) {
      std::vector<Rational> proj;
      proj.reserve(pts.size());
      for (const Point& p : pts) proj.emplace_back(slab.na * p.x + slab.nb * p.y);
      for (const Rational& c : slab.offsets) {
        std::vector<int8_t> col(n_);
        bool any_zero = false, any_flip = false;
        int first = 0;
        for (size_t i = 0; i < n_; ++i) {
          int s = cmp(proj[i], c);
          col[i] = static_cast<int8_t>(s);
          if (s == 0) any_zero = true;
          if (first == 0) first = s;
          else if (s != 0 && s != first) any_flip = true;
        }
        if (!any_zero && !any_flip) continue;
        if (seen.emplace(col, true).second) cols.push_back(std::move(col));
      }
    }
    n_lines_ = cols.size();
    sign_.assign(n_ * n_lines_, 0);
    for (size_t l = 0; l < n_lines_; ++l)
      for (size_t i = 0; i < n_; ++i) sign_[i * n_lines_ + l] = cols[l][i];
  }

  void build_hitcosts() {
    const auto& sigma = f_.domain();
    hitcost_.assign(n_ * n_, 0.0);
    max_hitcost_ = 0.0;
    for (size_t i = 0; i < n_; ++i) {
      for (size_t j = 0; j < n_; ++j) {
        if (i == j) continue;
        Polyline seg({sigma[i], sigma[j]});
        std::vector<Point> hits = sigma_hits(seg, sigma);
        double cost = 0.0;
        for (size_t h = 0; h + 1 < hits.size(); ++h)
          cost += (f_.value_at(hits[h + 1]) - f_.value_at(hits[h])).modulus();
        hitcost_[i * n_ + j] = cost;
        if (cost > max_hitcost_) max_hitcost_ = cost;
      }
    }
  }

  const FiniteFunction& f_;
  size_t n_;
  size_t n_lines_ = 0;
  std::vector<int8_t> sign_;     // [point][line]
  std::vector<double> hitcost_;  // [from][to]
  double max_hitcost_ = 0.0;
};

struct SearchOutcome {
  double value = 0.0;
  std::vector<int> word;
  std::vector<double> best_by_length;  // index = word length (exhaustive only)
  unsigned long long nodes = 0;
};

inline bool word_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Depth-first enumeration of words over sigma with distinct adjacent
/// letters. Entry-component counts per candidate line are maintained
/// incrementally: the previous letter's sign row is all the memory the
/// update rule needs, so undo is a plain decrement of the touched lines.
class DfsWorker {
 public:
  DfsWorker(const SearchContext& ctx, int lmax, bool prune)
      : ctx_(ctx), lmax_(lmax), prune_(prune), counts_(ctx.n_lines(), 0) {}

  void run_from(int first_letter) {
    count_stack_.clear();
    word_.clear();
    std::fill(counts_.begin(), counts_.end(), 0);
    vf_stack_.assign(1, 1);
    cvar_stack_.assign(1, 0.0);
    if (out_.best_by_length.empty()) out_.best_by_length.assign(lmax_ + 1, 0.0);
    push(first_letter);
    descend();
    pop();
  }

  SearchOutcome take() && { return std::move(out_); }

 private:
  void descend() {
    ++out_.nodes;
    const size_t len = word_.size();
    const double value = cvar_stack_.back() / vf_stack_.back();
    if (value > out_.value) {
      out_.value = value;
      out_.word = word_;
    }
    if (value > out_.best_by_length[len]) out_.best_by_length[len] = value;
    if (static_cast<int>(len) >= lmax_) return;
    if (prune_) {
      const double bound =
          (cvar_stack_.back() + (lmax_ - static_cast<double>(len)) * ctx_.max_hitcost()) /
          vf_stack_.back();
      if (bound <= out_.value) return;
    }
    const int last = word_.back();
    for (int next = 0; next < static_cast<int>(ctx_.n_points()); ++next) {
      if (next == last) continue;
      push(next);
      descend();
      pop();
    }
  }

  void push(int letter) {
    const size_t mark = touched_.size();
    int vf = vf_stack_.back();
    const int8_t* row = ctx_.sign_row(letter);
    if (word_.empty()) {
      for (size_t l = 0; l < counts_.size(); ++l) {
        if (row[l] == 0) {
          counts_[l] = 1;
          touched_.push_back(static_cast<uint32_t>(l));
          if (counts_[l] > vf) vf = counts_[l];
        }
      }
      cvar_stack_.push_back(0.0);
    } else {
      const int8_t* prev = ctx_.sign_row(word_.back());
      for (size_t l = 0; l < counts_.size(); ++l) {
        const int8_t s = row[l];
        const int8_t p = prev[l];
        if ((s == 0 && p != 0) || (s != 0 && p != 0 && s != p)) {
          ++counts_[l];
          touched_.push_back(static_cast<uint32_t>(l));
          if (counts_[l] > vf) vf = counts_[l];
        }
      }
      cvar_stack_.push_back(cvar_stack_.back() + ctx_.hitcost(word_.back(), letter));
    }
    count_stack_.push_back(mark);
    vf_stack_.push_back(vf);
    word_.push_back(letter);
  }

  void pop() {
    const size_t mark = count_stack_.back();
    count_stack_.pop_back();
    while (touched_.size() > mark) {
      --counts_[touched_.back()];
      touched_.pop_back();
    }
    vf_stack_.pop_back();
    cvar_stack_.pop_back();
    word_.pop_back();
  }

  const SearchContext& ctx_;
  const int lmax_;
  const bool prune_;
  std::vector<uint8_t> counts_;
  std::vector<uint32_t> touched_;
  std::vector<size_t> count_stack_;
  std::vector<int> vf_stack_;
  std::vector<double> cvar_stack_;
  std::vector<int> word_;
  SearchOutcome out_;
};

/// Worst-case word count for the budget: sum over lengths 1..lmax of
/// n (n-1)^(len-1), computed exactly.
inline Integer word_space_size(size_t n, int lmax) {
  if (n == 0) return 0;
  Integer total = 0;
  Integer layer = static_cast<long>(n);
  for (int len = 1; len <= lmax; ++len) {
    total += layer;
    layer *= static_cast<long>(n - 1);
    if (n == 1) break;
  }
  return total;
}

inline SearchOutcome run_search(const SearchContext& ctx, int lmax, bool prune, int threads) {
  const size_t n = ctx.n_points();
  std::vector<int> firsts(n);
  for (size_t i = 0; i < n; ++i) firsts[i] = static_cast<int>(i);

  auto run_subset = [&](size_t begin, size_t step) {
    DfsWorker worker(ctx, lmax, prune);
    for (size_t i = begin; i < firsts.size(); i += step) worker.run_from(firsts[i]);
    return std::move(worker).take();
  };

  if (threads <= 1 || n < 2) return run_subset(0, 1);

  const size_t workers = std::min<size_t>(threads, n);
  std::vector<std::future<SearchOutcome>> futures;
  for (size_t w = 0; w < workers; ++w)
    futures.push_back(std::async(std::launch::async, run_subset, w, workers));
  SearchOutcome merged;
  merged.best_by_length.assign(lmax + 1, 0.0);
  for (auto& fut : futures) {
    SearchOutcome part = fut.get();
    merged.nodes += part.nodes;
    for (size_t l = 0; l < part.best_by_length.size(); ++l)
      merged.best_by_length[l] = std::max(merged.best_by_length[l], part.best_by_length[l]);
    const bool better = part.value > merged.value;
    const bool tie_lex = part.value == merged.value && part.value > 0.0 &&
                         word_lex_less(part.word, merged.word);
    if (better || tie_lex) {
      merged.value = part.value;
      merged.word = std::move(part.word);
    }
  }
  return merged;
}

inline NormCertificate certificate_from_word(const FiniteFunction& f,
                                             const std::vector<int>& word) {
  std::vector<Point> pts;
  pts.reserve(word.size());
  for (int idx : word) pts.push_back(f.domain()[static_cast<size_t>(idx)]);
  return var_lower(f, pts);
}

}  // namespace detail

struct VarSearchProfile {
  std::vector<double> best_by_length;  // cumulative max, index = list budget
  unsigned long long nodes = 0;
};

inline NormResult heuristic_var_lower(const FiniteFunction& f, const SearchOptions& opts);

/// var(f, sigma) by search over vertex lists drawn from sigma with
/// distinct adjacent letters and length at most the budget. Exhaustive
/// and branch-bound modes fully cover that space (same value by
/// construction); "exact" is always relative to the enumerated budget.
inline NormResult var_search(const FiniteFunction& f, const SearchOptions& opts = {},
                             VarSearchProfile* profile = nullptr) {
  const size_t n = f.domain().size();
  if (n == 0) throw ValidationError("var_search on an empty sigma");
  if (opts.mode == SearchMode::heuristic) return heuristic_var_lower(f, opts);

  int lmax = opts.list_budget > 0 ? opts.list_budget : static_cast<int>(2 * n);
  if (opts.list_budget > 0 && opts.list_budget < 2)
    throw ValidationError("list budget must be at least 2");
  NormResult result;
  result.mode = opts.mode;
  result.list_budget = lmax;
  if (n == 1) {
    result.exact = true;
    result.upper = 0.0;
    result.certificate = detail::certificate_from_word(f, {});
    return result;
  }

  const unsigned long long limit = opts.node_limit ? opts.node_limit : default_node_limit();
  Integer space = detail::word_space_size(n, lmax);
  if (space > Integer(static_cast<unsigned long>(limit))) {
    throw ResourceError("word budget of " + space.get_str() + " nodes exceeds the limit of " +
                        std::to_string(limit) + " (shrink --lmax or raise the node limit)");
  }

  detail::SearchContext ctx(f);
  int threads = opts.threads >= 1 ? opts.threads
                                  : std::max(1u, std::thread::hardware_concurrency());
  detail::SearchOutcome out =
      detail::run_search(ctx, lmax, opts.mode == SearchMode::branch_bound, threads);

  result.lower = out.value;
  result.upper = out.value;
  result.exact = true;
  result.certificate = detail::certificate_from_word(f, out.word);
  if (profile) {
    profile->nodes = out.nodes;
    profile->best_by_length = out.best_by_length;
    for (size_t l = 1; l < profile->best_by_length.size(); ++l)
      profile->best_by_length[l] =
          std::max(profile->best_by_length[l], profile->best_by_length[l - 1]);
  }
  return result;
}

/// ||f||_BV = sup|f| + var(f, sigma), with the same search semantics.
inline NormResult bv_norm(const FiniteFunction& f, const SearchOptions& opts = {},
                          VarSearchProfile* profile = nullptr) {
  NormResult var = var_search(f, opts, profile);
  const double sup = f.sup_norm();
  var.lower += sup;
  if (var.upper) *var.upper += sup;
  return var;
}

/// BV norm of a function whose domain is collinear: max |f| plus the
/// ordinary variation along the line (points sorted by position).
inline double one_d_bv_norm(const FiniteFunction& f) {
  const auto& sigma = f.domain();
  if (sigma.empty()) throw ValidationError("one_d_bv_norm on an empty sigma");
  if (sigma.size() == 1) return f.sup_norm();
  const Point origin = sigma[0];
  Point dir_vec = sigma[1] - origin;
  for (const Point& p : sigma) {
    if (sgn(cross(dir_vec, p - origin)) != 0)
      throw ValidationError("one_d_bv_norm requires collinear points; " + p.str() +
                            " is off the line");
  }
  std::vector<std::pair<Rational, size_t>> order;
  order.reserve(sigma.size());
  for (size_t i = 0; i < sigma.size(); ++i)
    order.emplace_back(dot(sigma[i] - origin, dir_vec), i);
  std::sort(order.begin(), order.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  double var = 0.0;
  for (size_t i = 0; i + 1 < order.size(); ++i)
    var += (f.value_at_index(order[i + 1].second) - f.value_at_index(order[i].second)).modulus();
  return f.sup_norm() + var;
}

/// Greedy-plus-local-search lower bound. Seed words come from structured
/// families (collinear sweeps, best pairs, angular sweeps of the support);
/// on small sets the seed is then extended letter by letter and improved
/// by single-position swaps. Never claims exactness.
inline NormResult heuristic_var_lower(const FiniteFunction& f, const SearchOptions& opts) {
  const auto& sigma = f.domain();
  const size_t n = sigma.size();
  if (n == 0) throw ValidationError("var_search on an empty sigma");
  int lmax = opts.list_budget > 0 ? opts.list_budget : static_cast<int>(2 * n);

  std::vector<int> best_word;
  double best = 0.0;
  auto consider = [&](const std::vector<int>& word) {
    if (word.size() < 2) return;
    std::vector<int> w(word.begin(),
                       word.begin() + std::min<size_t>(word.size(), static_cast<size_t>(lmax)));
    NormCertificate cert = detail::certificate_from_word(f, w);
    if (cert.product > best) {
      best = cert.product;
      best_word = w;
    }
  };

  // Collinear sweeps: for every line through two sigma points, walk the
  // points of sigma on it in order (vf 1, cvar = 1-D variation).
  std::map<std::pair<std::pair<std::string, std::string>, std::string>, bool> seen_lines;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      Line line = Line::through(sigma[i], sigma[j]);
      auto key = std::make_pair(std::make_pair(line.a.get_str(), line.b.get_str()),
                                to_fraction_string(line.c));
      if (!seen_lines.emplace(key, true).second) continue;
      std::vector<std::pair<Rational, int>> on_line;
      const Point base = sigma[i];
      const Point dirv(Rational(line.b), Rational(-line.a));
      for (size_t k = 0; k < n; ++k) {
        if (line.contains(sigma[k])) on_line.emplace_back(dot(sigma[k] - base, dirv), (int)k);
      }
      std::sort(on_line.begin(), on_line.end(),
                [](const auto& l, const auto& r) { return l.first < r.first; });
      std::vector<int> word;
      for (const auto& [t, idx] : on_line) word.push_back(idx);
      consider(word);
    }
  }

  // Best pairs (covers two-point jumps with interior pass-through hits).
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j) consider({static_cast<int>(i), static_cast<int>(j)});

  // Angular sweep of the support around the origin, open and closed.
  std::vector<Point> supp = f.support();
  if (supp.size() >= 2 && supp.size() <= 24) {
    std::vector<std::pair<Point, int>> nonzero;
    for (const Point& p : supp) {
      if (!p.is_origin()) nonzero.emplace_back(p, *sigma.index_of(p));
    }
    std::sort(nonzero.begin(), nonzero.end(), [](const auto& l, const auto& r) {
      Direction dl = direction_of(l.first), dr = direction_of(r.first);
      if (angle_less(dl, dr)) return true;
      if (angle_less(dr, dl)) return false;
      return l.first.modulus_sq() < r.first.modulus_sq();
    });
    std::vector<int> sweep;
    for (const auto& [p, idx] : nonzero) sweep.push_back(idx);
    consider(sweep);
    if (sweep.size() >= 2) {
      std::vector<int> closed = sweep;
      if (closed.front() != closed.back()) {
        closed.push_back(closed.front());
        consider(closed);
      }
    }
  }

  // Greedy extension and swap refinement on small sets.
  if (n >= 2 && n <= 14) {
    auto evaluate = [&](const std::vector<int>& word) {
      return detail::certificate_from_word(f, word).product;
    };
    std::vector<int> word = best_word;
    if (word.empty()) word = {0};
    bool grew = true;
    while (grew && static_cast<int>(word.size()) < lmax) {
      grew = false;
      double best_gain = best;
      int best_next = -1;
      for (int next = 0; next < static_cast<int>(n); ++next) {
        if (!word.empty() && next == word.back()) continue;
        std::vector<int> cand = word;
        cand.push_back(next);
        double v = evaluate(cand);
        if (v > best_gain) {
          best_gain = v;
          best_next = next;
        }
      }
      if (best_next >= 0) {
        word.push_back(best_next);
        best = best_gain;
        best_word = word;
        grew = true;
      }
    }
    for (int pass = 0; pass < 3; ++pass) {
      bool improved = false;
      for (size_t pos = 0; pos < best_word.size(); ++pos) {
        for (int repl = 0; repl < static_cast<int>(n); ++repl) {
          std::vector<int> cand = best_word;
          cand[pos] = repl;
          bool ok = true;
          for (size_t q = 0; q + 1 < cand.size(); ++q)
            if (cand[q] == cand[q + 1]) ok = false;
          if (!ok) continue;
          double v = evaluate(cand);
          if (v > best) {
            best = v;
            best_word = cand;
            improved = true;
          }
        }
      }
      if (!improved) break;
    }
  }

  NormResult result;
  result.mode = SearchMode::heuristic;
  result.list_budget = lmax;
  result.lower = best;
  result.exact = false;
  result.certificate = detail::certificate_from_word(f, best_word);
  return result;
}

}  // namespace bvsigma
