#include "permpoly/degree.hpp"

#include <algorithm>
#include <numeric>

#include "permpoly/enumerate.hpp"

namespace permpoly {

Permutation beta_perm(const BetaShape& shape) {
  if (shape.p < 0 || shape.q < 0 || shape.p + shape.q < 1)
    throw std::invalid_argument("beta shape needs p, q >= 0 and p + q >= 1");
  const int s = shape.s();
  std::vector<int> v;
  for (int t = s; t >= shape.q + 3; --t) v.push_back(t);
  v.push_back(shape.q + 1);
  v.push_back(shape.q + 2);
  for (int t = shape.q; t >= 1; --t) v.push_back(t);
  return Permutation(std::move(v));
}

Basis degree_class_basis(int r, const BetaShape& shape) {
  if (r < 2) throw std::invalid_argument("r must be >= 2");
  return Basis({Permutation::identity(r), beta_perm(shape)});
}

bool in_degree_class(const Permutation& p, int r, const BetaShape& shape) {
  return !involves(Permutation::identity(r), p) &&
         !involves(beta_perm(shape), p);
}

int irreducible_length_bound(int r, const BetaShape& shape) {
  const int base = (r - 1) * (r - 1) * (shape.s() - 2);
  return shape.p > 0 && shape.q > 0 ? base - (r - 1) : base;
}

int irreducible_descent_bound(int r, const BetaShape& shape) {
  const int base = (r - 1) * (shape.s() - 2);
  return shape.p > 0 && shape.q > 0 ? base - 1 : base;
}

std::vector<Permutation> irreducibles_of(int r, const BetaShape& shape,
                                         Budget* budget) {
  const Basis basis = degree_class_basis(r, shape);
  const int bound = irreducible_length_bound(r, shape);
  std::vector<Permutation> out;
  std::vector<Permutation> level{Permutation()};
  for (int len = 0; len <= bound + 1; ++len) {
    if (len > 0) level = extend_avoiders(level, basis, len, budget);
    for (const auto& m : level) {
      if (!is_irreducible(m)) continue;
      if (len > bound)
        throw std::logic_error(
            "irreducible member found past the length bound");
      out.push_back(m);
    }
  }
  return out;
}

namespace {

int lds_of_values(const std::vector<int>& vals) {
  const int m = static_cast<int>(vals.size());
  std::vector<int> best(static_cast<size_t>(m), 1);
  int out = m == 0 ? 0 : 1;
  for (int i = 0; i < m; ++i) {
    for (int t = 0; t < i; ++t)
      if (vals[static_cast<size_t>(t)] > vals[static_cast<size_t>(i)])
        best[static_cast<size_t>(i)] = std::max(
            best[static_cast<size_t>(i)], best[static_cast<size_t>(t)] + 1);
    out = std::max(out, best[static_cast<size_t>(i)]);
  }
  return out;
}

// Unary exclusions and pairwise conflicts implied by the expansibility
// characterisation, precomputed per host.
struct ExpansionConstraints {
  int n = 0;
  bool pairwise = false;  // conflicts present only when p, q >= 1
  std::vector<bool> excluded;
  std::vector<std::vector<bool>> conflict;

  ExpansionConstraints(const Permutation& host, const BetaShape& shape) {
    n = host.size();
    excluded.assign(static_cast<size_t>(n), false);
    const auto& v = host.values();
    const int p = shape.p, q = shape.q;
    if (p >= 1 && q >= 1) {
      pairwise = true;
      conflict.assign(static_cast<size_t>(n),
                      std::vector<bool>(static_cast<size_t>(n), false));
    }
    for (int j = 0; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (v[static_cast<size_t>(j)] >= v[static_cast<size_t>(k)]) continue;
        // ascent (j, k)
        if (p == 0) {
          for (int l = k + 1; l < n; ++l)
            if (v[static_cast<size_t>(l)] < v[static_cast<size_t>(j)])
              excluded[static_cast<size_t>(l)] = true;
          continue;
        }
        if (q == 0) {
          for (int i = 0; i < j; ++i)
            if (v[static_cast<size_t>(i)] > v[static_cast<size_t>(k)])
              excluded[static_cast<size_t>(i)] = true;
          continue;
        }
        std::vector<int> tops, bottoms;
        for (int i = 0; i < j; ++i)
          if (v[static_cast<size_t>(i)] > v[static_cast<size_t>(k)])
            tops.push_back(i);
        for (int l = k + 1; l < n; ++l)
          if (v[static_cast<size_t>(l)] < v[static_cast<size_t>(j)])
            bottoms.push_back(l);
        for (int i : tops)
          for (int l : bottoms) {
            conflict[static_cast<size_t>(i)][static_cast<size_t>(l)] = true;
            conflict[static_cast<size_t>(l)][static_cast<size_t>(i)] = true;
          }
        if (q >= 2 && !bottoms.empty()) {
          std::vector<int> top_vals;
          for (int i : tops) top_vals.push_back(v[static_cast<size_t>(i)]);
          if (lds_of_values(top_vals) >= p)
            for (int l : bottoms) excluded[static_cast<size_t>(l)] = true;
        }
        if (p >= 2 && !tops.empty()) {
          std::vector<int> bottom_vals;
          for (int l : bottoms) bottom_vals.push_back(v[static_cast<size_t>(l)]);
          if (lds_of_values(bottom_vals) >= q)
            for (int i : tops) excluded[static_cast<size_t>(i)] = true;
        }
      }
    }
  }

  bool admits(const std::vector<int>& positions) const {
    for (size_t a = 0; a < positions.size(); ++a) {
      const int i = positions[a];
      if (i < 0 || i >= n) throw std::invalid_argument("position out of range");
      if (excluded[static_cast<size_t>(i)]) return false;
      if (!pairwise) continue;
      for (size_t b = a + 1; b < positions.size(); ++b)
        if (conflict[static_cast<size_t>(i)]
                    [static_cast<size_t>(positions[b])])
          return false;
    }
    return true;
  }
};

// Exact maximum independent set over the candidate vertices.
int max_independent(const ExpansionConstraints& cons,
                    std::vector<int> verts) {
  if (verts.empty()) return 0;
  if (!cons.pairwise) return static_cast<int>(verts.size());
  const int v0 = verts.front();
  std::vector<int> rest(verts.begin() + 1, verts.end());
  std::vector<int> compatible;
  bool isolated = true;
  for (int w : rest) {
    if (cons.conflict[static_cast<size_t>(v0)][static_cast<size_t>(w)])
      isolated = false;
    else
      compatible.push_back(w);
  }
  const int with_v0 = 1 + max_independent(cons, compatible);
  if (isolated) return with_v0;
  return std::max(with_v0, max_independent(cons, std::move(rest)));
}

void require_member(const Permutation& host, int r, const BetaShape& shape) {
  if (!in_degree_class(host, r, shape))
    throw std::invalid_argument("host is not in the class");
  if (!is_irreducible(host))
    throw std::invalid_argument("host is not irreducible");
}

}  // namespace

bool is_expansible(const Permutation& host, const std::vector<int>& positions,
                   int r, const BetaShape& shape) {
  require_member(host, r, shape);
  ExpansionConstraints cons(host, shape);
  return cons.admits(positions);
}

ExpansibleSet max_expansible(const Permutation& host, int r,
                             const BetaShape& shape) {
  require_member(host, r, shape);
  ExpansionConstraints cons(host, shape);
  std::vector<int> verts;
  for (int i = 0; i < host.size(); ++i)
    if (!cons.excluded[static_cast<size_t>(i)]) verts.push_back(i);

  ExpansibleSet out;
  out.host = host;
  if (!cons.pairwise) {
    out.positions = verts;
    return out;
  }
  const int target = max_independent(cons, verts);
  std::vector<int> chosen;
  std::vector<int> pool = verts;
  for (size_t a = 0; a < pool.size() && static_cast<int>(chosen.size()) < target;
       ++a) {
    const int v = pool[a];
    bool ok = true;
    for (int c : chosen)
      if (cons.conflict[static_cast<size_t>(c)][static_cast<size_t>(v)])
        ok = false;
    if (!ok) continue;
    std::vector<int> rem;
    for (size_t b = a + 1; b < pool.size(); ++b) {
      const int w = pool[b];
      bool comp =
          !cons.conflict[static_cast<size_t>(v)][static_cast<size_t>(w)];
      for (int c : chosen)
        comp = comp &&
               !cons.conflict[static_cast<size_t>(c)][static_cast<size_t>(w)];
      if (comp) rem.push_back(w);
    }
    if (static_cast<int>(chosen.size()) + 1 + max_independent(cons, rem) >=
        target)
      chosen.push_back(v);
  }
  out.positions = chosen;
  return out;
}

Permutation expand(const Permutation& host,
                   const std::vector<int>& run_lengths) {
  const int m = host.size();
  if (static_cast<int>(run_lengths.size()) != m)
    throw std::invalid_argument("one run length per host position required");
  for (int l : run_lengths)
    if (l < 1)
      throw std::invalid_argument("run lengths must be >= 1");
  std::vector<int> base(static_cast<size_t>(m), 0);
  std::vector<int> by_value(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i)
    by_value[static_cast<size_t>(host[i] - 1)] = i;
  int next = 1;
  for (int vrank = 0; vrank < m; ++vrank) {
    const int i = by_value[static_cast<size_t>(vrank)];
    base[static_cast<size_t>(i)] = next;
    next += run_lengths[static_cast<size_t>(i)];
  }
  std::vector<int> vals;
  for (int i = 0; i < m; ++i) {
    const int len = run_lengths[static_cast<size_t>(i)];
    const int lo = base[static_cast<size_t>(i)];
    for (int t = len - 1; t >= 0; --t) vals.push_back(lo + t);
  }
  return Permutation(std::move(vals));
}

DegreeReport degree_of(int r, const BetaShape& shape, Budget* budget) {
  DegreeReport report;
  report.r = r;
  report.shape = shape;
  report.lower_bound = (r - 1) * (shape.s() - 2) - 1;
  report.upper_bound = shape.p > 0 && shape.q > 0
                           ? (r - 1) * (r - 1) * (shape.s() - 2) - r
                           : (r - 1) * (r - 1) * (shape.s() - 2) - 1;
  try {
    std::vector<Permutation> irr = irreducibles_of(r, shape, budget);
    report.irreducible_count = static_cast<int>(irr.size());
    int best = -1;
    for (const auto& host : irr) {
      report.max_irreducible_length =
          std::max(report.max_irreducible_length, host.size());
      ExpansibleSet e = max_expansible(host, r, shape);
      if (static_cast<int>(e.positions.size()) > best) {
        best = static_cast<int>(e.positions.size());
        report.witness = e;
      }
    }
    report.exact_degree = best - 1;
  } catch (const BudgetExceeded&) {
    report.budget_exceeded = true;
  }
  return report;
}

namespace {

// Layer-label sequence of the interlocking construction: x leading points
// of the first layer, then for each adjacent pair of layers an
// alternating boundary block [k, k+1, k, ..., k], then x+1 trailing
// points of the last layer.  The same sequence describes both the
// position axis and the value axis.
std::vector<int> witness_labels(int r, int x) {
  std::vector<int> s;
  for (int t = 0; t < x; ++t) s.push_back(1);
  for (int k = 1; k <= r - 2; ++k) {
    for (int t = 0; t < x; ++t) {
      s.push_back(k);
      s.push_back(k + 1);
    }
    s.push_back(k);
  }
  for (int t = 0; t < x + 1; ++t) s.push_back(r - 1);
  return s;
}

Permutation witness_construction(int r, int x) {
  const std::vector<int> labels = witness_labels(r, x);
  const int n = static_cast<int>(labels.size());
  std::vector<std::vector<int>> slots(static_cast<size_t>(r));
  for (int i = 0; i < n; ++i)
    slots[static_cast<size_t>(labels[static_cast<size_t>(i)])].push_back(i);
  std::vector<int> vals(static_cast<size_t>(n), 0);
  for (int k = 1; k <= r - 1; ++k) {
    const auto& sl = slots[static_cast<size_t>(k)];
    const int m = static_cast<int>(sl.size());
    for (int j = 0; j < m; ++j)
      vals[static_cast<size_t>(sl[static_cast<size_t>(j)])] =
          sl[static_cast<size_t>(m - 1 - j)] + 1;
  }
  return Permutation(std::move(vals));
}

// Positions of the x+1 lowest-valued (bottom) or highest-valued (top)
// points of each layer.
std::vector<int> witness_layer_points(int r, int x, bool bottom) {
  const std::vector<int> labels = witness_labels(r, static_cast<int>(x));
  const int n = static_cast<int>(labels.size());
  std::vector<std::vector<int>> slots(static_cast<size_t>(r));
  for (int i = 0; i < n; ++i)
    slots[static_cast<size_t>(labels[static_cast<size_t>(i)])].push_back(i);
  std::vector<int> out;
  for (int k = 1; k <= r - 1; ++k) {
    const auto& sl = slots[static_cast<size_t>(k)];
    const int m = static_cast<int>(sl.size());
    // bottom values sit at the rightmost positions of the layer
    if (bottom)
      for (int j = m - (x + 1); j < m; ++j)
        out.push_back(sl[static_cast<size_t>(j)]);
    else
      for (int j = 0; j < x + 1; ++j)
        out.push_back(sl[static_cast<size_t>(j)]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ExpansibleSet lemma_witness(int r, const BetaShape& shape, Budget* budget) {
  if (r < 2) throw std::invalid_argument("r must be >= 2");
  if (shape.p < 0 || shape.q < 0 || shape.p + shape.q < 1)
    throw std::invalid_argument("beta shape needs p, q >= 0 and p + q >= 1");
  const int x = shape.p + shape.q - 1;
  const int want_len = (r - 1) * (2 * shape.s() - 5);
  const int want_size = (r - 1) * (shape.s() - 2);

  Permutation host = witness_construction(r, x);
  if (host.size() == want_len && is_irreducible(host) &&
      in_degree_class(host, r, shape)) {
    const bool bottom_first = shape.p != 0;
    for (bool bottom : {bottom_first, !bottom_first}) {
      std::vector<int> positions = witness_layer_points(r, x, bottom);
      if (static_cast<int>(positions.size()) == want_size &&
          is_expansible(host, positions, r, shape))
        return ExpansibleSet{host, std::move(positions)};
    }
    ExpansibleSet best = max_expansible(host, r, shape);
    if (static_cast<int>(best.positions.size()) >= want_size) {
      best.positions.resize(static_cast<size_t>(want_size));
      return best;
    }
  }

  // Exhaustive fallback: any irreducible member of the target length
  // carrying a large enough expansible set.
  Budget local;
  if (!budget) budget = &local;
  std::vector<Permutation> level =
      generate_avoiders(degree_class_basis(r, shape), want_len, budget);
  for (const auto& cand : level) {
    if (!is_irreducible(cand)) continue;
    ExpansibleSet best = max_expansible(cand, r, shape);
    if (static_cast<int>(best.positions.size()) >= want_size) {
      best.positions.resize(static_cast<size_t>(want_size));
      return best;
    }
  }
  throw DiscrepancyError(
      "no irreducible member of length " + std::to_string(want_len) +
      " carries an expansible set of size " + std::to_string(want_size));
}

Permutation witness_irreducible(int r, const BetaShape& shape,
                                Budget* budget) {
  return lemma_witness(r, shape, budget).host;
}

}  // namespace permpoly
