#include "lctkit/puiseux.hpp"

#include <map>
#include <functional>
#include <numeric>

#include "lctkit/config.hpp"
#include "lctkit/errors.hpp"
#include "lctkit/newton_polygon.hpp"
#include "lctkit/qpoly.hpp"

namespace lctkit {

namespace {

struct NumSeries {
  std::map<Rational, BigComplex> terms;
  std::optional<Rational> trunc;  // unknown at and above; nullopt for exact data
  bool pruned = false;            // nonzero terms at or above the cap were discarded
};

struct Cluster {
  BigComplex center;
  int multiplicity;
};

class Engine {
 public:
  Engine(const Rational& depth, ExpansionMode mode, long precision, int degree)
      : depth_(depth),
        cap_(Rational(degree) * depth + 1),
        mode_(mode),
        prec_(precision),
        zero_tol_(pow2(-precision / 2, precision)) {}

  std::vector<NumSeries> from_exact(const UPoly<PSeries>& h) const {
    std::vector<NumSeries> out;
    for (const auto& c : h.dense()) {
      NumSeries s;
      s.trunc = c.trunc();
      for (const auto& [e, q] : c.terms()) {
        if (e >= cap_) {
          s.pruned = true;
          break;
        }
        s.terms.emplace(e, BigComplex(q, prec_));
      }
      out.push_back(std::move(s));
    }
    return out;
  }

  void expand(const std::vector<NumSeries>& c, int wanted, const std::optional<Rational>& previous,
              const std::vector<PuiseuxTerm>& prefix, const std::vector<PuiseuxStep>& path,
              const std::vector<PSeries>* exact) {
    const int node = next_node_++;
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<OrderVal> orders;
    for (const auto& s : c) orders.push_back(order_of(s));
    NewtonPolygon np = polygon_from_power_orders(orders);

    auto above = [&](const Rational& q) { return !previous || q > *previous; };
    int sure = 0, ambiguous = 0;
    for (const auto& g : np.groups) {
      if (g.order.is_infinite() || above(g.order.value()))
        sure += g.count;
      else if (g.order.is_at_least())
        ambiguous += g.count;
    }
    const int leftover = wanted - sure;
    if (leftover < 0 || leftover > ambiguous)
      throw PrecisionError("Newton-Puiseux: branch root count does not match its cluster size");

    int group = 0;
    auto emit_group = [&](int count, OrderVal relative, OrderVal internal) {
      for (int i = 0; i < count; ++i) {
        PuiseuxRoot root;
        root.terms = prefix;
        root.path = path;
        root.leaf = {node, group, relative, internal};
        roots_.push_back(std::move(root));
      }
      ++group;
    };
    if (leftover > 0) emit_group(leftover, OrderVal::at_least(*previous), OrderVal::at_least(*previous));

    int deep_count = 0;
    int branch = 0;
    // Largest orders first, matching the left-to-right layout of the polygon.
    for (auto it = np.groups.rbegin(); it != np.groups.rend(); ++it) {
      const RootGroup& g = *it;
      if (g.order.is_infinite()) {
        emit_group(g.count, OrderVal::infinite(), OrderVal::infinite());
        continue;
      }
      if (!above(g.order.value())) continue;
      if (g.order.is_at_least()) {
        emit_group(g.count, g.order, g.order);
        continue;
      }
      const Rational gamma = g.order.value();
      if (gamma >= depth_) {
        deep_count += g.count;
        continue;
      }
      for (const Cluster& cl : clusters_for(c, np, g, exact)) {
        std::vector<PuiseuxTerm> child_prefix = prefix;
        child_prefix.push_back({gamma, cl.center});
        std::vector<PuiseuxStep> child_path = path;
        child_path.push_back({node, branch++, gamma});
        if (mode_ == ExpansionMode::Separate && cl.multiplicity == 1) {
          PuiseuxRoot root;
          root.terms = std::move(child_prefix);
          root.path = std::move(child_path);
          root.leaf = {-1, -1, OrderVal::at_least(gamma), OrderVal::infinite()};
          roots_.push_back(std::move(root));
          continue;
        }
        expand(shift(c, cl.center, gamma, n), cl.multiplicity, gamma, child_prefix, child_path, nullptr);
      }
    }
    if (deep_count > 0) emit_group(deep_count, OrderVal::at_least(depth_), OrderVal::at_least(depth_));
  }

  std::vector<PuiseuxRoot> take_roots() { return std::move(roots_); }

 private:
  OrderVal order_of(const NumSeries& s) const {
    if (!s.terms.empty()) return OrderVal::exact(s.terms.begin()->first);
    if (s.trunc && *s.trunc <= cap_) return OrderVal::at_least(*s.trunc);
    // Only terms beyond the cap could be present: they never touch edges of order below depth.
    if (s.trunc || s.pruned) return OrderVal::exact(cap_);
    return OrderVal::infinite();
  }

  std::vector<Cluster> clusters_for(const std::vector<NumSeries>& c, const NewtonPolygon& np, const RootGroup& g,
                                    const std::vector<PSeries>* exact) {
    const Rational& gamma = g.order.value();
    Rational beta;
    for (const auto& seg : np.segments)
      if (seg.left == g.left && seg.right == g.right) beta = seg.left_height + Rational(seg.left) * gamma;
    const int degree = g.right - g.left;

    if (exact != nullptr) {
      QPoly phi(degree + 1, Rational(0));
      for (int j = g.left; j <= g.right; ++j) phi[j - g.left] = (*exact)[j].coefficient(beta - Rational(j) * gamma);
      std::vector<Cluster> out;
      for (const auto& [factor, mult] : squarefree_decomposition(phi)) {
        std::vector<BigComplex> coeffs;
        for (const auto& q : factor) coeffs.emplace_back(q, prec_);
        for (auto& z : polynomial_roots(coeffs, prec_)) out.push_back({polish(coeffs, std::move(z), 1), mult});
      }
      int total = 0;
      for (const auto& cl : out) total += cl.multiplicity;
      if (total != degree) throw ConsistencyError("characteristic polynomial degree mismatch");
      return out;
    }

    std::vector<BigComplex> phi;
    for (int j = g.left; j <= g.right; ++j) {
      const auto& terms = c[j].terms;
      auto it = terms.find(beta - Rational(j) * gamma);
      phi.push_back(it == terms.end() ? BigComplex(prec_) : it->second);
    }
    auto raw = polynomial_roots(phi, prec_);
    if (static_cast<int>(raw.size()) != degree) throw PrecisionError("edge polynomial lost its degree");
    const BigFloat tol = pow2(-prec_ / (2 * degree), prec_);
    std::vector<int> parent(raw.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (std::size_t a = 0; a < raw.size(); ++a)
      for (std::size_t b = a + 1; b < raw.size(); ++b) {
        BigFloat scale = max(BigFloat(1, prec_), abs(raw[a]));
        if (abs(raw[a] - raw[b]) <= tol * scale) parent[find(static_cast<int>(b))] = find(static_cast<int>(a));
      }
    std::vector<Cluster> out;
    std::map<int, std::size_t> slot;
    std::vector<BigComplex> sums;
    for (std::size_t a = 0; a < raw.size(); ++a) {
      int r = find(static_cast<int>(a));
      auto [it, inserted] = slot.emplace(r, out.size());
      if (inserted) {
        out.push_back({raw[a], 0});
        sums.push_back(BigComplex(prec_));
      }
      out[it->second].multiplicity += 1;
      sums[it->second] += raw[a];
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      BigComplex mean = sums[i] * BigFloat(Rational(1, out[i].multiplicity), prec_);
      out[i].center = polish(phi, std::move(mean), out[i].multiplicity);
    }
    return out;
  }

  // Newton iteration on the (k-1)-st derivative, where a k-fold root is simple.
  BigComplex polish(const std::vector<BigComplex>& coeffs, BigComplex z, int k) const {
    std::vector<BigComplex> p = coeffs;
    for (int d = 1; d < k; ++d) {
      std::vector<BigComplex> q;
      for (std::size_t i = 1; i < p.size(); ++i) q.push_back(p[i] * BigFloat(static_cast<long>(i), prec_));
      p = std::move(q);
    }
    const BigFloat tight = pow2(-prec_ + 8, prec_);
    for (int iter = 0; iter < 200; ++iter) {
      BigComplex v = p.back(), dv(prec_);
      for (std::size_t i = p.size() - 1; i-- > 0;) {
        dv = dv * z + v;
        v = v * z + p[i];
      }
      if (v.is_zero() || dv.is_zero()) break;
      BigComplex step = v / dv;
      z -= step;
      if (abs(step) <= tight * max(BigFloat(1, prec_), abs(z))) break;
    }
    return z;
  }

  // Coefficients of P(y + u t^gamma).
  std::vector<NumSeries> shift(const std::vector<NumSeries>& c, const BigComplex& u, const Rational& gamma, int n) const {
    std::vector<BigComplex> upow{BigComplex(Rational(1), prec_)};
    for (int i = 1; i <= n; ++i) upow.push_back(upow.back() * u);
    std::vector<NumSeries> out(n + 1);
    for (int k = 0; k <= n; ++k) {
      NumSeries& target = out[k];
      for (int j = k; j <= n; ++j) {
        if (c[j].trunc) {
          Rational t = *c[j].trunc + Rational(j - k) * gamma;
          if (!target.trunc || t < *target.trunc) target.trunc = t;
        }
      }
      struct Acc {
        BigComplex sum;
        BigFloat scale;
      };
      std::map<Rational, Acc> acc;
      for (int j = k; j <= n; ++j) {
        if (c[j].pruned) target.pruned = true;
        const Rational offset = Rational(j - k) * gamma;
        BigComplex factor = upow[j - k] * BigFloat(Rational(binomial(j, k)), prec_);
        for (const auto& [e, v] : c[j].terms) {
          Rational e2 = e + offset;
          if (target.trunc && e2 >= *target.trunc) break;
          if (e2 >= cap_) {
            target.pruned = true;
            break;
          }
          BigComplex contribution = factor * v;
          BigFloat size = abs(contribution);
          auto found = acc.find(e2);
          if (found == acc.end()) {
            acc.emplace(e2, Acc{std::move(contribution), std::move(size)});
          } else {
            found->second.sum += contribution;
            if (found->second.scale < size) found->second.scale = size;
          }
        }
      }
      for (auto& [e, a] : acc) {
        if (abs(a.sum) <= zero_tol_ * a.scale) continue;
        target.terms.emplace(e, std::move(a.sum));
      }
    }
    return out;
  }

  Rational depth_;
  Rational cap_;
  ExpansionMode mode_;
  long prec_;
  BigFloat zero_tol_;
  int next_node_ = 0;
  std::vector<PuiseuxRoot> roots_;
};

BigFloat coefficient_tolerance(long precision) { return pow2(-precision / 2, precision); }

bool coefficients_differ(const BigComplex& a, const BigComplex& b, long precision) {
  BigFloat scale = max(BigFloat(1, precision), max(abs(a), abs(b)));
  return abs(a - b) > coefficient_tolerance(precision) * scale;
}

std::optional<Rational> lower_bound_of(const OrderVal& v) {
  if (v.is_infinite()) return std::nullopt;
  return v.value();
}

OrderVal compare_expansions(const std::map<Rational, BigComplex>& a, const std::map<Rational, BigComplex>& b,
                            const std::optional<Rational>& limit, long precision) {
  std::map<Rational, int> exponents;
  for (const auto& [e, v] : a) exponents.emplace(e, 0);
  for (const auto& [e, v] : b) exponents.emplace(e, 0);
  const BigComplex zero(precision);
  for (const auto& [e, unused] : exponents) {
    if (limit && e >= *limit) break;
    auto ia = a.find(e);
    auto ib = b.find(e);
    const BigComplex& va = ia == a.end() ? zero : ia->second;
    const BigComplex& vb = ib == b.end() ? zero : ib->second;
    if (coefficients_differ(va, vb, precision)) return OrderVal::exact(e);
  }
  if (!limit) return OrderVal::infinite();
  return OrderVal::at_least(*limit);
}

std::map<Rational, BigComplex> term_map(const PuiseuxRoot& r) {
  std::map<Rational, BigComplex> m;
  for (const auto& t : r.terms) m.emplace(t.exponent, t.coeff);
  return m;
}

}  // namespace

OrderVal PuiseuxRootSet::difference_order(std::size_t a, std::size_t b) const {
  if (a == b) return OrderVal::infinite();
  const auto& ra = roots.at(a);
  const auto& rb = roots.at(b);
  std::size_t level = 0;
  while (level < ra.path.size() && level < rb.path.size() && ra.path[level].node == rb.path[level].node &&
         ra.path[level].branch == rb.path[level].branch)
    ++level;
  const bool a_more = level < ra.path.size();
  const bool b_more = level < rb.path.size();
  if (a_more && b_more) return OrderVal::exact(std::min(ra.path[level].gamma, rb.path[level].gamma));
  if (a_more) return min(OrderVal::exact(ra.path[level].gamma), rb.leaf.relative);
  if (b_more) return min(OrderVal::exact(rb.path[level].gamma), ra.leaf.relative);
  if (ra.leaf.node == rb.leaf.node && ra.leaf.group == rb.leaf.group) return ra.leaf.internal;
  return min(ra.leaf.relative, rb.leaf.relative);
}

PuiseuxRootSet puiseux_roots(const UPoly<PSeries>& h, const Rational& depth, ExpansionMode mode, long precision) {
  if (depth <= 0) throw DomainError("expansion depth must be positive");
  Engine engine(depth, mode, precision, h.degree());
  auto exact = h.dense();
  engine.expand(engine.from_exact(h), h.degree(), std::nullopt, {}, {}, &exact);
  PuiseuxRootSet set;
  set.depth = depth;
  set.precision = precision;
  set.roots = engine.take_roots();
  if (static_cast<int>(set.roots.size()) != h.degree())
    throw PrecisionError("Newton-Puiseux produced the wrong number of roots");
  return set;
}

PuiseuxRootSet puiseux_roots_adaptive(const UPoly<PSeries>& h, const Rational& depth, ExpansionMode mode, long bits) {
  long precision = bits > 0 ? bits : default_precision();
  for (int attempt = 0;; ++attempt) {
    try {
      return puiseux_roots(h, depth, mode, precision);
    } catch (const PrecisionError&) {
      if (attempt >= kPrecisionRetries) throw;
      precision *= 2;
    }
  }
}

PuiseuxRootSet puiseux_expand(const UPoly<PSeries>& h, const Rational& depth) {
  PuiseuxRootSet set = puiseux_roots_adaptive(h, depth, ExpansionMode::Full);
  for (const auto& r : set.roots) {
    const OrderVal& rem = r.remainder();
    if (rem.is_at_least() && rem.value() < depth)
      throw TruncationError("coefficient truncation is too small for expansion depth " + to_string(depth),
                            "increase the truncation of the coefficients");
  }
  return set;
}

OrderVal contact_order(const PuiseuxRoot& root, const PSeries& w, long precision) {
  std::map<Rational, BigComplex> wm;
  for (const auto& [e, q] : w.terms()) wm.emplace(e, BigComplex(q, precision));
  std::optional<Rational> limit = lower_bound_of(root.remainder());
  if (w.trunc()) limit = limit ? std::min(*limit, *w.trunc()) : *w.trunc();
  return compare_expansions(term_map(root), wm, limit, precision);
}

OrderVal contact_order(const PuiseuxRoot& a, const PuiseuxRoot& b, long precision) {
  std::optional<Rational> limit = lower_bound_of(a.remainder());
  auto lb = lower_bound_of(b.remainder());
  if (lb) limit = limit ? std::min(*limit, *lb) : *lb;
  return compare_expansions(term_map(a), term_map(b), limit, precision);
}

}  // namespace lctkit
