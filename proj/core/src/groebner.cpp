#include "curvelab/elim/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "curvelab/error.hpp"

namespace curvelab {

MonomialOrder MonomialOrder::lex(std::vector<std::string> ranking) {
  return MonomialOrder{Kind::kLex, std::move(ranking), 0};
}

MonomialOrder MonomialOrder::graded_lex(std::vector<std::string> ranking) {
  return MonomialOrder{Kind::kGradedLex, std::move(ranking), 0};
}

MonomialOrder MonomialOrder::grevlex(std::vector<std::string> ranking) {
  return MonomialOrder{Kind::kGradedReverseLex, std::move(ranking), 0};
}

MonomialOrder MonomialOrder::elimination(std::vector<std::string> eliminate, std::vector<std::string> keep) {
  MonomialOrder o;
  o.kind = Kind::kBlockElimination;
  o.block = eliminate.size();
  o.ranking = std::move(eliminate);
  o.ranking.insert(o.ranking.end(), keep.begin(), keep.end());
  return o;
}

namespace {

int compare_grevlex(const Exponents& a, const Exponents& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int compare_lex(const Exponents& a, const Exponents& b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  const std::size_t n = ranking.size();
  switch (kind) {
    case Kind::kLex: return compare_lex(a, b, n);
    case Kind::kGradedLex: {
      unsigned da = 0, db = 0;
      for (std::size_t i = 0; i < n; ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da < db ? -1 : 1;
      return compare_lex(a, b, n);
    }
    case Kind::kGradedReverseLex: return compare_grevlex(a, b, 0, n);
    case Kind::kBlockElimination: {
      const int c = compare_grevlex(a, b, 0, block);
      return c != 0 ? c : compare_grevlex(a, b, block, n);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case Kind::kLex: return "lex";
    case Kind::kGradedLex: return "graded-lex";
    case Kind::kGradedReverseLex: return "grevlex";
    case Kind::kBlockElimination: return "block-elimination";
  }
  return "?";
}

namespace {

struct GTerm {
  Exponents e{};
  mpz_class c;
};
using GPoly = std::vector<GTerm>;

std::uint32_t support_mask(const Exponents& e) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (e[i] != 0) m |= 1u << i;
  }
  return m;
}

bool divides(const Exponents& d, const Exponents& m, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] > m[i]) return false;
  }
  return true;
}

Exponents lcm_of(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kMaxVariables; ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponents difference(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kMaxVariables; ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  return r;
}

bool disjoint(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

unsigned degree(const Exponents& e) { return exponent_sum(e); }

class Engine {
 public:
  Engine(const MonomialOrder& order, const Deadline& deadline)
      : order_(order), n_(order.ranking.size()), deadline_(deadline) {
    if (n_ > kMaxVariables) throw Error(ErrorCode::kTooManyVariables, "Gröbner ring has more than 8 variables");
  }

  GPoly from_poly(const MultiPoly& p) const {
    std::vector<std::size_t> where;
    for (const auto& v : p.variables()) {
      const auto it = std::find(order_.ranking.begin(), order_.ranking.end(), v);
      if (it == order_.ranking.end()) {
        throw Error(ErrorCode::kInvalidArgument, "variable '" + v + "' is not in the ring");
      }
      where.push_back(static_cast<std::size_t>(it - order_.ranking.begin()));
    }
    const mpz_class l = p.denominator_lcm();
    GPoly out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      GTerm g;
      for (std::size_t i = 0; i < where.size(); ++i) g.e[where[i]] = t.exponents[i];
      g.c = t.coeff.num() * (l / t.coeff.den());
      out.push_back(std::move(g));
    }
    sort(out);
    make_primitive(out);
    return out;
  }

  MultiPoly to_poly(const GPoly& g, bool monic) const {
    std::vector<MultiPoly::Term> terms;
    terms.reserve(g.size());
    for (const auto& t : g) {
      terms.push_back(MultiPoly::Term{t.e, monic ? Rational(t.c, g.front().c) : Rational(t.c)});
    }
    return MultiPoly::from_terms(order_.ranking, std::move(terms));
  }

  void sort(GPoly& p) const {
    std::sort(p.begin(), p.end(), [&](const GTerm& a, const GTerm& b) { return order_.compare(a.e, b.e) > 0; });
  }

  static void make_primitive(GPoly& p) {
    if (p.empty()) return;
    mpz_class g = 0;
    for (const auto& t : p) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
      if (g == 1) break;
    }
    if (p.front().c < 0) g = -g;
    if (g != 1) {
      for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    }
  }

  // a * p[start..] - b * x^shift * g[1..]
  GPoly combine(const GPoly& p, std::size_t start, const mpz_class& a, const GPoly& g,
                const Exponents& shift, const mpz_class& b) const {
    GPoly out;
    out.reserve(p.size() - start + g.size());
    std::size_t i = start, j = 1;
    while (i < p.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(GTerm{p[i].e, a * p[i].c});
        ++i;
        continue;
      }
      Exponents e{};
      for (std::size_t k = 0; k < n_; ++k) e[k] = static_cast<std::uint16_t>(g[j].e[k] + shift[k]);
      const int c = i == p.size() ? -1 : order_.compare(p[i].e, e);
      if (c > 0) {
        out.push_back(GTerm{p[i].e, a * p[i].c});
        ++i;
      } else if (c < 0) {
        out.push_back(GTerm{e, -(b * g[j].c)});
        ++j;
      } else {
        mpz_class v = a * p[i].c - b * g[j].c;
        if (v != 0) out.push_back(GTerm{e, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  const GPoly* find_divisor(const Exponents& m, const std::vector<const GPoly*>& basis,
                            const std::vector<std::uint32_t>& masks) const {
    const std::uint32_t mm = support_mask(m);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if ((masks[k] & ~mm) != 0) continue;
      if (divides(basis[k]->front().e, m, n_)) return basis[k];
    }
    return nullptr;
  }

  // Full reduction. When `scale` is given it tracks the rational factor s
  // with result = s * (true remainder).
  GPoly reduce(GPoly p, const std::vector<const GPoly*>& basis, mpq_class* scale) const {
    std::vector<std::uint32_t> masks;
    masks.reserve(basis.size());
    for (const GPoly* g : basis) masks.push_back(support_mask(g->front().e));
    GPoly r;
    std::size_t start = 0;
    unsigned steps = 0;
    while (start < p.size()) {
      deadline_.check("Gröbner basis computation");
      const GPoly* g = find_divisor(p[start].e, basis, masks);
      if (!g) {
        r.push_back(std::move(p[start]));
        ++start;
        continue;
      }
      mpz_class d;
      mpz_gcd(d.get_mpz_t(), g->front().c.get_mpz_t(), p[start].c.get_mpz_t());
      mpz_class a = g->front().c / d;
      mpz_class b = p[start].c / d;
      if (a < 0) {
        a = -a;
        b = -b;
      }
      const Exponents shift = difference(p[start].e, g->front().e);
      p = combine(p, start + 1, a, *g, shift, b);
      start = 0;
      if (a != 1) {
        for (auto& t : r) t.c *= a;
        if (scale) *scale *= a;
      }
      if (++steps % 16 == 0) remove_content(r, p, scale);
    }
    remove_content(r, p, scale);
    return r;
  }

  static void remove_content(GPoly& r, GPoly& p, mpq_class* scale) {
    mpz_class g = 0;
    for (const GPoly* q : {&r, &p}) {
      for (const auto& t : *q) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) return;
      }
    }
    if (g == 0 || g == 1) return;
    for (GPoly* q : {&r, &p}) {
      for (auto& t : *q) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    }
    if (scale) *scale /= g;
  }

  GPoly spoly(const GPoly& f, const GPoly& g) const {
    const Exponents l = lcm_of(f.front().e, g.front().e);
    mpz_class d;
    mpz_gcd(d.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
    const mpz_class a = g.front().c / d;
    const mpz_class b = f.front().c / d;
    // a * x^(l - lt f) * f - b * x^(l - lt g) * g, leading terms cancel.
    const Exponents sf = difference(l, f.front().e);
    GPoly shifted;
    shifted.reserve(f.size());
    for (const auto& t : f) {
      Exponents e{};
      for (std::size_t k = 0; k < n_; ++k) e[k] = static_cast<std::uint16_t>(t.e[k] + sf[k]);
      shifted.push_back(GTerm{e, t.c});
    }
    return combine(shifted, 1, a, g, difference(l, g.front().e), b);
  }

  std::vector<GPoly> groebner(std::vector<GPoly> inputs) const;

  const MonomialOrder& order() const { return order_; }

 private:
  struct Pair {
    std::size_t i, j;
    Exponents lcm;
    unsigned deg;
  };

  void update(std::vector<GPoly>& polys, std::vector<bool>& active, std::vector<Pair>& pairs,
              std::size_t h) const;

  const MonomialOrder& order_;
  std::size_t n_;
  const Deadline& deadline_;
};

void Engine::update(std::vector<GPoly>& polys, std::vector<bool>& active, std::vector<Pair>& pairs,
                    std::size_t h) const {
  const Exponents& lh = polys[h].front().e;
  std::vector<Pair> c;
  for (std::size_t g = 0; g < h; ++g) {
    if (active[g]) {
      const Exponents l = lcm_of(lh, polys[g].front().e);
      c.push_back(Pair{g, h, l, degree(l)});
    }
  }
  // Chain criterion among the new pairs.
  std::vector<Pair> d;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const Pair& p = c[k];
    bool keep = disjoint(lh, polys[p.i].front().e);
    if (!keep) {
      keep = true;
      for (std::size_t m = k + 1; m < c.size() && keep; ++m) {
        if (divides(c[m].lcm, p.lcm, n_)) keep = false;
      }
      for (const Pair& q : d) {
        if (!keep) break;
        if (divides(q.lcm, p.lcm, n_)) keep = false;
      }
    }
    if (keep) d.push_back(p);
  }
  std::vector<Pair> e;
  for (const Pair& p : d) {
    if (!disjoint(lh, polys[p.i].front().e)) e.push_back(p);
  }
  std::vector<Pair> kept;
  for (const Pair& p : pairs) {
    const bool drop = divides(lh, p.lcm, n_) &&
                      lcm_of(polys[p.i].front().e, lh) != p.lcm &&
                      lcm_of(polys[p.j].front().e, lh) != p.lcm;
    if (!drop) kept.push_back(p);
  }
  kept.insert(kept.end(), e.begin(), e.end());
  pairs = std::move(kept);
  for (std::size_t g = 0; g < h; ++g) {
    if (active[g] && divides(lh, polys[g].front().e, n_)) active[g] = false;
  }
  active[h] = true;
}

std::vector<GPoly> Engine::groebner(std::vector<GPoly> inputs) const {
  std::vector<GPoly> polys;
  std::vector<bool> active;
  std::vector<Pair> pairs;
  auto active_basis = [&] {
    std::vector<const GPoly*> b;
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if (active[k]) b.push_back(&polys[k]);
    }
    return b;
  };
  auto insert = [&](GPoly h) -> bool {
    make_primitive(h);
    polys.push_back(std::move(h));
    active.push_back(false);
    update(polys, active, pairs, polys.size() - 1);
    return polys.back().size() == 1 && degree(polys.back().front().e) == 0;
  };

  // Smaller generators first keeps the early reductions cheap.
  std::stable_sort(inputs.begin(), inputs.end(), [&](const GPoly& a, const GPoly& b) {
    return order_.compare(a.front().e, b.front().e) < 0;
  });
  for (auto& f : inputs) {
    GPoly h = reduce(std::move(f), active_basis(), nullptr);
    if (h.empty()) continue;
    if (insert(std::move(h))) return {GPoly{GTerm{Exponents{}, 1}}};
  }

  while (!pairs.empty()) {
    deadline_.check("Gröbner basis computation");
    // Normal strategy: smallest lcm (degree, then term order).
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.deg != b.deg) return a.deg < b.deg;
      return order_.compare(a.lcm, b.lcm) < 0;
    });
    const Pair p = *best;
    pairs.erase(best);
    GPoly h = reduce(spoly(polys[p.i], polys[p.j]), active_basis(), nullptr);
    if (h.empty()) continue;
    if (insert(std::move(h))) return {GPoly{GTerm{Exponents{}, 1}}};
  }

  // Interreduce the (already minimal) active set.
  std::vector<GPoly> result;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    if (!active[k]) continue;
    std::vector<const GPoly*> others;
    for (std::size_t m = 0; m < polys.size(); ++m) {
      if (active[m] && m != k) others.push_back(&polys[m]);
    }
    GPoly r = reduce(polys[k], others, nullptr);
    make_primitive(r);
    result.push_back(std::move(r));
  }
  std::sort(result.begin(), result.end(), [&](const GPoly& a, const GPoly& b) {
    return order_.compare(a.front().e, b.front().e) > 0;
  });
  return result;
}

void check_ring(const Ideal& ideal, const MonomialOrder& order) {
  std::set<std::string> ranked(order.ranking.begin(), order.ranking.end());
  for (const auto& g : ideal.generators) {
    for (const auto& v : g.variables()) {
      if (!ranked.count(v)) throw Error(ErrorCode::kInvalidArgument, "variable '" + v + "' missing from the monomial order");
    }
  }
}

}  // namespace

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& G, const MonomialOrder& order,
                      const Deadline& deadline) {
  if (p.is_zero()) return p;
  Engine engine(order, deadline);
  std::vector<GPoly> basis;
  for (const auto& g : G) {
    if (g.is_zero()) throw Error(ErrorCode::kInvalidArgument, "normal form modulo the zero polynomial");
    basis.push_back(engine.from_poly(g));
  }
  std::vector<const GPoly*> ptrs;
  for (const auto& g : basis) ptrs.push_back(&g);
  // from_poly clears denominators and content; keep track of that factor.
  GPoly start = engine.from_poly(p);
  const MultiPoly p_int = engine.to_poly(start, false);
  mpq_class scale = (p_int.leading_coeff() / p.leading_coeff()).get();
  const GPoly r = engine.reduce(std::move(start), ptrs, &scale);
  if (r.empty()) return MultiPoly();
  return engine.to_poly(r, false) * Rational(mpq_class(1 / scale));
}

std::vector<MultiPoly> buchberger(const Ideal& ideal, const MonomialOrder& order, const Deadline& deadline) {
  check_ring(ideal, order);
  Engine engine(order, deadline);
  std::vector<GPoly> inputs;
  for (const auto& g : ideal.generators) {
    if (!g.is_zero()) inputs.push_back(engine.from_poly(g));
  }
  if (inputs.empty()) throw Error(ErrorCode::kInvalidArgument, "Gröbner basis of the zero ideal");
  std::vector<MultiPoly> out;
  for (const auto& g : engine.groebner(std::move(inputs))) out.push_back(engine.to_poly(g, true));
  return out;
}

Ideal elimination_ideal(const Ideal& ideal, const std::vector<std::string>& keep, const Deadline& deadline) {
  std::vector<std::string> eliminate;
  for (const auto& v : ideal.ring) {
    if (std::find(keep.begin(), keep.end(), v) == keep.end()) eliminate.push_back(v);
  }
  for (const auto& v : keep) {
    if (std::find(ideal.ring.begin(), ideal.ring.end(), v) == ideal.ring.end()) {
      throw Error(ErrorCode::kInvalidArgument, "kept variable '" + v + "' is not a ring variable");
    }
  }
  const auto order = MonomialOrder::elimination(eliminate, keep);
  Ideal out;
  out.ring = keep;
  for (auto& g : buchberger(ideal, order, deadline)) {
    const bool free = std::none_of(eliminate.begin(), eliminate.end(),
                                   [&](const std::string& v) { return g.depends_on(v); });
    if (free) out.generators.push_back(std::move(g));
  }
  return out;
}

std::map<std::string, unsigned> leading_monomial(const MultiPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) return {};
  Engine engine(order, Deadline());
  const GPoly g = engine.from_poly(p);
  std::map<std::string, unsigned> out;
  for (std::size_t i = 0; i < order.ranking.size(); ++i) {
    if (g.front().e[i] != 0) out[order.ranking[i]] = g.front().e[i];
  }
  return out;
}

}  // namespace curvelab
