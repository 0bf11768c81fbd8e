#include "curvelab/elim/implicitize.hpp"

#include <algorithm>

#include "curvelab/elim/groebner.hpp"
#include "curvelab/elim/resultant.hpp"
#include "curvelab/error.hpp"
#include "curvelab/poly/gcd.hpp"

namespace curvelab {

const char* elim_method_name(ElimMethod m) {
  switch (m) {
    case ElimMethod::kResultant: return "resultant";
    case ElimMethod::kGroebner: return "groebner";
    case ElimMethod::kBoth: return "both";
  }
  return "?";
}

ElimMethod parse_elim_method(std::string_view text) {
  if (text == "resultant") return ElimMethod::kResultant;
  if (text == "groebner") return ElimMethod::kGroebner;
  if (text == "both") return ElimMethod::kBoth;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown method '" + std::string(text) + "' (expected groebner, resultant or both)");
}

namespace {

void fill_degrees(ImplicitCurve& c) {
  c.total_degree = c.defining.total_degree();
  c.degree_xy = c.defining.degree_in({"x", "y"});
  c.degree_x = c.defining.degree("x");
  c.degree_y = c.defining.degree("y");
}

// Splits off the factor of p free of `var` when it does not lie on the point.
MultiPoly strip_free_factor(const MultiPoly& p, const char* var, const ParametricPoint& point,
                            std::vector<RemovedFactor>& removed) {
  if (!p.depends_on(var)) return p;
  const MultiPoly c = content_in(p, var);
  if (c.is_constant() || verify_on_curve(c, point)) return p;
  removed.push_back({c, std::string("factor free of ") + var + " does not vanish on the locus"});
  return exact_quotient(p, c);
}

}  // namespace

ImplicitCurve clean_candidate(const MultiPoly& candidate, const ParametricPoint& point, std::string path) {
  if (candidate.is_zero()) throw Error(ErrorCode::kTrivialResult, "elimination produced the zero polynomial");
  ImplicitCurve curve;
  curve.provenance.path = std::move(path);
  auto& removed = curve.provenance.removed;

  auto [content, prim] = content_primitive(candidate, {"x", "y"});
  if (!content.is_constant()) removed.push_back({normalize(content), "pure-parameter factor"});
  if (prim.is_constant()) {
    throw Error(ErrorCode::kTrivialResult, "elimination result is free of x and y");
  }

  MultiPoly p = normalize(prim);
  const MultiPoly sf = squarefree_part(p);
  if (!(sf == p)) {
    removed.push_back({exact_quotient(p, sf), "repeated factor"});
    p = sf;
  }
  p = strip_free_factor(p, "y", point, removed);
  p = strip_free_factor(p, "x", point, removed);
  p = normalize(p);
  if (!verify_on_curve(p, point)) {
    throw Error(ErrorCode::kEliminationFailed,
                "eliminant does not vanish identically on the parametrization: " + p.to_string());
  }
  curve.defining = std::move(p);
  fill_degrees(curve);
  return curve;
}

namespace {

ImplicitCurve via_resultant(const MultiPoly& p1, const MultiPoly& p2, const ParametricPoint& point,
                            const Deadline& deadline) {
  deadline.check("resultant elimination");
  const MultiPoly r = sylvester_resultant(p1, p2, point.parameter);
  deadline.check("resultant elimination");
  return clean_candidate(r, point, "resultant");
}

ImplicitCurve via_groebner(const MultiPoly& p1, const MultiPoly& p2, const ParametricPoint& point,
                           const Deadline& deadline) {
  std::vector<std::string> keep = point.symbols();
  keep.push_back("x");
  keep.push_back("y");
  keep = sort_variables(keep);
  Ideal ideal;
  ideal.generators = {p1, p2};
  ideal.ring = keep;
  ideal.ring.insert(ideal.ring.begin(), point.parameter);
  const Ideal elim = elimination_ideal(ideal, keep, deadline);
  if (elim.generators.empty()) {
    throw Error(ErrorCode::kTrivialResult, "the elimination ideal is zero");
  }

  std::vector<MultiPoly> verified;
  std::vector<MultiPoly> rejected;
  for (const auto& g : elim.generators) {
    deadline.check("Gröbner elimination");
    const bool on_curve = (g.depends_on("x") || g.depends_on("y")) && verify_on_curve(g, point);
    (on_curve ? verified : rejected).push_back(g);
  }
  if (verified.empty()) {
    throw Error(ErrorCode::kEliminationFailed, "no elimination-ideal generator vanishes on the parametrization");
  }
  std::stable_sort(verified.begin(), verified.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return a.total_degree() < b.total_degree();
  });
  // Every verified generator is a multiple of the curve's polynomial, so the
  // gcd with the others can only remove extraneous factors.
  MultiPoly chosen = verified.front();
  for (std::size_t k = 1; k < verified.size(); ++k) {
    const MultiPoly g = poly_gcd(chosen, verified[k]);
    if (g.degree_in({"x", "y"}) > 0) chosen = g;
  }
  ImplicitCurve curve = clean_candidate(chosen, point, "groebner");
  for (const auto& g : elim.generators) {
    if (!are_associates(g, verified.front())) curve.provenance.other_generators.push_back(g);
  }
  if (elim.generators.size() > 1) {
    curve.provenance.notes.push_back("elimination ideal has " + std::to_string(elim.generators.size()) +
                                     " generators; chose the smallest one vanishing on the locus");
  }
  return curve;
}

}  // namespace

ImplicitCurve implicitize(const ParametricPoint& point, const ImplicitizeOptions& options) {
  const bool x_moves = point.x.depends_on(point.parameter);
  const bool y_moves = point.y.depends_on(point.parameter);
  if (!x_moves && !y_moves) {
    throw Error(ErrorCode::kTrivialResult, "the traced point does not depend on '" + point.parameter + "'");
  }
  const auto [p1, p2] = clear_to_system(point);

  ImplicitCurve result;
  if (!x_moves || !y_moves) {
    result = clean_candidate(x_moves ? p2 : p1, point, "direct");
  } else if (options.method == ElimMethod::kResultant) {
    result = via_resultant(p1, p2, point, options.deadline);
  } else if (options.method == ElimMethod::kGroebner) {
    result = via_groebner(p1, p2, point, options.deadline);
  } else {
    std::optional<ImplicitCurve> res, gb;
    std::string failures;
    try {
      res = via_resultant(p1, p2, point, options.deadline);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDeadlineExceeded && e.code() != ErrorCode::kEliminationFailed) throw;
      failures += std::string("resultant path: ") + e.what() + "; ";
    }
    try {
      gb = via_groebner(p1, p2, point, options.deadline);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDeadlineExceeded && e.code() != ErrorCode::kEliminationFailed) throw;
      failures += std::string("groebner path: ") + e.what() + "; ";
    }
    if (!res && !gb) throw Error(ErrorCode::kEliminationFailed, "both elimination paths failed: " + failures);
    result = res ? *res : *gb;
    if (res && gb) {
      result.provenance.paths_agree = are_associates(res->defining, gb->defining);
      result.provenance.other_generators = gb->provenance.other_generators;
      for (const auto& r : gb->provenance.removed) {
        result.provenance.removed.push_back({r.factor, "groebner path: " + r.reason});
      }
    } else {
      result.provenance.notes.push_back(failures);
    }
  }
  result.provenance.construction = options.construction;
  if (const auto lim = point.limit_at_infinity()) {
    result.provenance.notes.push_back("parameter value at infinity is not reached; limit point (" +
                                      lim->first.to_string() + ", " + lim->second.to_string() + ")");
  }
  return result;
}

}  // namespace curvelab
