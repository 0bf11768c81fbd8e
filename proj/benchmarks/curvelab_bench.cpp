#include <benchmark/benchmark.h>

#include "curvelab/analysis/analysis.hpp"
#include "curvelab/analysis/factor.hpp"
#include "curvelab/catalog/catalog.hpp"
#include "curvelab/elim/groebner.hpp"
#include "curvelab/elim/implicitize.hpp"
#include "curvelab/elim/resultant.hpp"
#include "curvelab/io/construction.hpp"
#include "curvelab/io/expr.hpp"
#include "curvelab/locus/locus.hpp"
#include "curvelab/plot/plot.hpp"

namespace curvelab {
namespace {

ParametricPoint program(const char* name) {
  const Catalog& cat = Catalog::builtin();
  return compile_construction(parse_construction(cat.construction(name).text), cat);
}

const char* const kPrograms[] = {"kulp", "ellipse_hyperbolism", "secant", "circle_origin_hyperbolism",
                                 "piriform_hyperbolism", "nephroid_hyperbolism", "gerono"};

void BM_Implicitize(benchmark::State& state, ElimMethod method) {
  const char* name = kPrograms[state.range(0)];
  const ParametricPoint point = program(name);
  ImplicitizeOptions opts;
  opts.method = method;
  for (auto _ : state) {
    opts.deadline = Deadline::unlimited();
    benchmark::DoNotOptimize(implicitize(point, opts));
  }
  state.SetLabel(name);
}
BENCHMARK_CAPTURE(BM_Implicitize, resultant, ElimMethod::kResultant)->DenseRange(0, 6);
BENCHMARK_CAPTURE(BM_Implicitize, groebner, ElimMethod::kGroebner)->DenseRange(0, 6);

void BM_SylvesterResultant(benchmark::State& state) {
  const auto [p1, p2] = clear_to_system(program("nephroid_hyperbolism"));
  for (auto _ : state) benchmark::DoNotOptimize(sylvester_resultant(p1, p2, "u"));
}
BENCHMARK(BM_SylvesterResultant);

void BM_Buchberger(benchmark::State& state) {
  const auto [p1, p2] = clear_to_system(program("gerono"));
  Ideal ideal;
  ideal.generators = {p1, p2};
  ideal.ring = {"u", "x", "a", "b", "y"};
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(ideal, MonomialOrder::elimination({"u"}, {"x", "a", "b", "y"})));
}
BENCHMARK(BM_Buchberger);

void BM_FactorBivariate(benchmark::State& state) {
  const MultiPoly F = parse_poly("(x^2 + y^2 - 1)*(x^3 - y^2 + 2*x*y)*(x - 3*y + 5)*(x*y - 7)");
  for (auto _ : state) benchmark::DoNotOptimize(factor_bivariate(F));
}
BENCHMARK(BM_FactorBivariate);

void BM_IrreducibleNephroid(benchmark::State& state) {
  const MultiPoly G = implicitize(program("nephroid_hyperbolism")).defining;
  IrreducibilityOptions opts;
  opts.trials = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(irreducible_over_rationals(G, opts));
}
BENCHMARK(BM_IrreducibleNephroid)->Arg(1)->Arg(3)->Arg(5);

void BM_SingularPoints(benchmark::State& state) {
  const MultiPoly F = parse_poly("x^4 - a^2*x^2 + b^2*y^2");
  for (auto _ : state) benchmark::DoNotOptimize(singular_points(F, {{"a", 1}, {"b", 1}}));
}
BENCHMARK(BM_SingularPoints);

void BM_Contour(benchmark::State& state) {
  const MultiPoly F = parse_poly("x^4 - 4*x^2 + y^2");
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(contour_implicit(F, {}, {-2.5, 2.5, -2.5, 2.5}, grid));
  state.SetComplexityN(grid);
}
BENCHMARK(BM_Contour)->RangeMultiplier(2)->Range(64, 512)->Complexity(benchmark::oNSquared);

void BM_RenderFamily(benchmark::State& state) {
  FamilySpec spec;
  spec.program = Catalog::builtin().construction("secant").text;
  spec.bindings = parse_bindings("r=1");
  spec.parameter = "d";
  spec.values = sweep(Rational(1, 2), 4, 8);
  spec.viewport = {-1.5, 1.5, -8, 8};
  for (auto _ : state) benchmark::DoNotOptimize(render_svg(family_scene(spec)));
}
BENCHMARK(BM_RenderFamily);

}  // namespace
}  // namespace curvelab

BENCHMARK_MAIN();
