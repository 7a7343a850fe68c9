/* Acceptance suite: one line per criterion, exact checks, wall-clock timing.
 * Exit status 0 iff every criterion passes. */

#include "ainfty/face_complex.hpp"
#include "ainfty/io.hpp"
#include "helpers.hpp"

#include <chrono>
#include <iostream>

using namespace ainfty;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& run) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = run(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label << " ("
              << dt << "s)";
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!ok) ++failures;
}

bool expect(bool cond, const std::string& what, std::string& detail) {
    if (!cond && detail.size() < 400) detail += (detail.empty() ? "" : "; ") + what;
    return cond;
}

bool agreement_holds(const Report& r, std::string& detail, const std::string& who) {
    bool ok = true;
    for (const auto& e : r.checks)
        if (e.name.find("formulation-agreement") != std::string::npos)
            ok = expect(e.ok, who + ": formulations disagree", detail) && ok;
    return ok;
}

std::vector<std::pair<int, int>> shapes_up_to(int bound) {
    std::vector<std::pair<int, int>> out;
    for (int k = 0; k <= bound; ++k)
        for (int l = 0; k + l <= bound; ++l) out.emplace_back(k, l);
    return out;
}

}  // namespace

int main() {
    std::cout << "acceptance suite\n";

    criterion(1, "degrees of the five worked diagrams", 1.0, [](std::string& detail) {
        bool ok = true;
        ok &= expect(parse_diagram("<a,b,c,d>_{2,0}").degree() == 2, "deg 2", detail);
        ok &= expect(parse_diagram("<a,b,c,d,e,f,g,h,i>_{3,4}").degree() == 7, "deg 7", detail);
        ok &= expect(parse_diagram("<m2(m2(b,c),m2(d,e)),m2(f,a)>_{0,0}").degree() == 0, "deg 0",
                     detail);
        ok &= expect(parse_diagram("<a,b,m3(c,d,m2(e,f)),g,m2(h,i)>_{1,2}").degree() == 4, "deg 4",
                     detail);
        ok &= expect(parse_diagram("<c,m2(d,e),m2(m2(f,g),h),i,m4(j,k,a,b)>_{2,1}").degree() == 5,
                     "deg 5", detail);
        return ok;
    });

    criterion(2, "differential base cases", 1.0, [](std::string& detail) {
        bool ok = true;
        ok &= expect(differential(Diagram::bare(0, 0)).empty(), "(0,0) not closed", detail);
        auto d10 = differential(Diagram::bare(1, 0));
        ok &= expect(d10.size() == 2, "(1,0) term count", detail);
        ok &= expect(d10.count(parse_diagram("<m2(a1,a2),a3>_{0,0}")) == 1 &&
                         d10.count(parse_diagram("<a2,m2(a3,a1)>_{0,0}")) == 1,
                     "(1,0) terms", detail);
        auto d01 = differential(Diagram::bare(0, 1));
        ok &= expect(d01.size() == 2, "(0,1) term count", detail);
        ok &= expect(d01.count(parse_diagram("<m2(a1,a2),a3>_{0,0}")) == 1 &&
                         d01.count(parse_diagram("<a1,m2(a2,a3)>_{0,0}")) == 1,
                     "(0,1) terms", detail);
        ok &= expect(differential(Diagram::bare(2, 0)).size() == 5, "(2,0) five terms", detail);
        ok &= expect(differential(Diagram::bare(0, 2)).size() == 5, "(0,2) five terms", detail);
        ok &= expect(differential(Diagram::bare(1, 1)).size() == 6, "(1,1) six terms", detail);
        return ok;
    });

    criterion(3, "d^2 = 0 with paired cancellations, all shapes k+l <= 4", 30.0,
              [](std::string& detail) {
                  bool ok = true;
                  for (auto [k, l] : shapes_up_to(4)) {
                      DSquaredReport r = check_d_squared(enumerate_faces(k, l));
                      std::string tag = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
                      ok &= expect(r.ok, tag + " d^2 != 0", detail);
                      ok &= expect(r.pre_cancellation_terms ==
                                       2 * (r.independent_pairs + r.composed_pairs),
                                   tag + " unpaired terms", detail);
                  }
                  return ok;
              });

    criterion(4, "f-vectors, bracketing oracle, mirror symmetry, euler characteristic", 60.0,
              [](std::string& detail) {
                  bool ok = true;
                  auto fv = [](int k, int l) { return enumerate_faces(k, l).f_vector(); };
                  using V = std::vector<long long>;
                  ok &= expect(fv(1, 0) == V{2, 1}, "(1,0)", detail);
                  ok &= expect(fv(2, 0) == V{5, 5, 1}, "(2,0)", detail);
                  ok &= expect(fv(0, 2) == V{5, 5, 1}, "(0,2)", detail);
                  ok &= expect(fv(1, 1) == V{6, 6, 1}, "(1,1)", detail);
                  ok &= expect(fv(3, 0) == V{14, 21, 9, 1}, "(3,0)", detail);
                  // independent bracketing oracle for the (3,0) counts
                  AbstractComplex k5 = associahedron_oracle(3);
                  std::map<int, long long> oracle_counts;
                  for (int d : k5.degrees) ++oracle_counts[d];
                  V oracle{oracle_counts[0], oracle_counts[1], oracle_counts[2], oracle_counts[3]};
                  ok &= expect(fv(3, 0) == oracle, "(3,0) vs bracketing oracle", detail);
                  ok &= expect(poset_isomorphic(to_abstract(enumerate_faces(2, 1)),
                                                to_abstract(enumerate_faces(1, 2)))
                                   .isomorphic,
                               "(2,1) vs (1,2)", detail);
                  for (auto [k, l] : shapes_up_to(4))
                      ok &= expect(enumerate_faces(k, l).euler() == 1,
                                   "euler (" + std::to_string(k) + "," + std::to_string(l) + ")",
                                   detail);
                  return ok;
              });

    criterion(5, "the (n,0) complexes are the bracketing polytopes, n = 1..4", 60.0,
              [](std::string& detail) {
                  bool ok = true;
                  for (int n = 1; n <= 4; ++n) {
                      PosetIso iso = poset_isomorphic(to_abstract(enumerate_faces(n, 0)),
                                                      associahedron_oracle(n));
                      ok &= expect(iso.isomorphic, "n=" + std::to_string(n), detail);
                      ok &= expect(iso.witness.size() == enumerate_faces(n, 0).cells.size(),
                                   "witness size n=" + std::to_string(n), detail);
                  }
                  return ok;
              });

    criterion(6, "master sign check: both formulations agree on every fixture", 40.0,
              [](std::string& detail) {
                  bool ok = true;
                  // valid fixtures: both formulations pass
                  for (const std::string& name :
                       {std::string("exterior-1gen"), std::string("frobenius-1t"),
                        std::string("small-m3-mod2")}) {
                      Bundles b = example_bundles(name);
                      AlgebraPtr alg = b.algebras.begin()->second;
                      Report r = check_ainfinity(*alg);
                      ok &= expect(r.pass, name + " algebra", detail);
                      ok &= agreement_holds(r, detail, name);
                      Report rs = check_bimodule(self_bimodule(alg));
                      ok &= expect(rs.pass, name + " self-bimodule", detail);
                      ok &= agreement_holds(rs, detail, name + " self");
                      Report rd = check_bimodule(dual_self_bimodule(alg));
                      ok &= expect(rd.pass, name + " dual-self-bimodule", detail);
                      ok &= agreement_holds(rd, detail, name + " dual-self");
                  }
                  {
                      Report rip = check_inner_product(
                          example_bundles("frobenius-1t").sole_inner_product());
                      ok &= expect(rip.pass, "frobenius-1t pairing", detail);
                      ok &= agreement_holds(rip, detail, "frobenius-1t pairing");
                      testutil::GradedFrobenius gf = testutil::graded_frobenius();
                      Report rgf = check_inner_product(gf.pairing);
                      ok &= expect(rgf.pass, "signed pairing fixture", detail);
                      ok &= agreement_holds(rgf, detail, "signed pairing fixture");
                  }
                  // mutants: both formulations fail
                  {
                      Report r = check_ainfinity(
                          example_bundles("dga-nonassoc-mutant").sole_algebra());
                      ok &= expect(!r.pass, "mutant accepted", detail);
                      ok &= agreement_holds(r, detail, "mutant");
                      bool rel_failed = false, bar_failed = false;
                      for (const auto& e : r.checks) {
                          if (e.formulation == "unsuspended-relations" && !e.ok) rel_failed = true;
                          if (e.formulation == "suspended-bar" && !e.ok) bar_failed = true;
                      }
                      ok &= expect(rel_failed && bar_failed, "mutant must fail both ways", detail);

                      AlgebraPtr alg = testutil::frobenius_algebra();
                      PairingTable p{0, 0, {}};
                      p.values.emplace(std::vector<std::string>{"one", "t"},
                                       Scalar::one(Field::Rational));
                      std::map<std::pair<int, int>, PairingTable> pairings;
                      pairings.emplace(std::make_pair(0, 0), std::move(p));
                      Report rp = check_inner_product(make_inner_product(alg, pairings));
                      ok &= expect(!rp.pass, "pairing mutant accepted", detail);
                      ok &= agreement_holds(rp, detail, "pairing mutant");
                      bool rel = false, mor = false;
                      for (const auto& e : rp.checks) {
                          if (e.name.rfind("pairing-relations", 0) == 0 && !e.ok) rel = true;
                          if (e.name.rfind("morphism-form", 0) == 0 && !e.ok) mor = true;
                      }
                      ok &= expect(rel && mor, "pairing mutant must fail both ways", detail);
                  }
                  return ok;
              });

    criterion(7, "dg reductions trigger only the displayed low-arity equations", 30.0,
              [](std::string& detail) {
                  bool ok = true;
                  AlgebraPtr alg = testutil::frobenius_algebra();
                  // arity > 3: every candidate term needs a component of arity > 2
                  for (int K = 4; K <= 6; ++K) {
                      bool structurally_zero = true;
                      for (int i = 1; i <= K; ++i)
                          if (alg->ops.count(i) && alg->ops.count(K - i + 1))
                              structurally_zero = false;
                      ok &= expect(structurally_zero,
                                   "arity " + std::to_string(K) + " has live terms", detail);
                  }
                  // and the sums themselves vanish identically on every tuple
                  std::vector<std::string> tuple;
                  std::function<bool(int, int)> walk = [&](int K, int i) -> bool {
                      if (i == K) return algebra_relation(*alg, tuple).is_zero();
                      for (const auto& e : alg->basis->elements()) {
                          tuple.push_back(e.label);
                          bool good = walk(K, i + 1);
                          tuple.pop_back();
                          if (!good) return false;
                      }
                      return true;
                  };
                  for (int K = 4; K <= 5; ++K) {
                      tuple.clear();
                      ok &= expect(walk(K, 0), "arity " + std::to_string(K) + " sum", detail);
                  }

                  // dg-bimodule and dg-morphism reductions likewise stop at blocks of three
                  auto self = std::make_shared<AInfinityBimodule>(self_bimodule(alg));
                  auto dual_self = std::make_shared<AInfinityBimodule>(dual_self_bimodule(alg));
                  MultiMap f00 = MultiMap::marked_map(alg->basis, alg->basis, dual_self->module,
                                                      0, 0, 0, Field::Rational);
                  f00.set_unit({"one"}, "t*", Scalar::one(Field::Rational));
                  f00.set_unit({"t"}, "one*", Scalar::one(Field::Rational));
                  BimoduleMorphism pd = from_dg_bimodule_map(self, dual_self, f00);
                  ok &= expect(check_bimodule(*self).pass, "self bimodule", detail);
                  ok &= expect(check_bimodule_map(pd).pass, "pairing morphism", detail);
                  for (int K = 4; K <= 5; ++K) {
                      for (int mark = 0; mark < K; ++mark) {
                          std::vector<std::string> t(static_cast<std::size_t>(K), "one");
                          t[(mark + 1) % K] = "t";
                          ok &= expect(bimodule_relation(*self, t, mark).is_zero(),
                                       "module block " + std::to_string(K), detail);
                          ok &= expect(morphism_relation(pd, t, mark).is_zero(),
                                       "morphism block " + std::to_string(K), detail);
                      }
                  }
                  return ok;
              });

    criterion(8, "lift/project round trips and squares on 100 random families", 60.0,
              [](std::string& detail) {
                  bool ok = true;
                  testutil::Rng rng(20260810);
                  TruncationPolicy trunc{5};
                  int families = 0;
                  while (families < 100) {
                      Field field = (families % 2 == 0) ? Field::Rational : Field::ModTwo;
                      ViewKind kind = static_cast<ViewKind>((families / 2) % 4);
                      BasisPtr V = testutil::random_basis(rng, "V");
                      BasisPtr W = testutil::random_basis(rng, "W");
                      BasisPtr Z = testutil::random_basis(rng, "Z");
                      int degree = rng.pick(-1, 1);
                      PlainFamily plain;
                      MarkedFamily marked;
                      if (kind == ViewKind::Coderivation || kind == ViewKind::MarkedCoderivation) {
                          BasisPtr out = kind == ViewKind::Coderivation ? V : W;
                          for (int n = 1; n <= 3; ++n) {
                              MultiMap m = MultiMap::plain_map(V, out, n, degree, field, true);
                              testutil::randomize_plain(m, rng);
                              if (!m.is_zero()) plain.emplace(n, std::move(m));
                          }
                      } else {
                          if (kind == ViewKind::ModuleDifferential)
                              for (int n = 1; n <= 2; ++n) {
                                  MultiMap m = MultiMap::plain_map(V, V, n, degree, field, true);
                                  testutil::randomize_plain(m, rng);
                                  if (!m.is_zero()) plain.emplace(n, std::move(m));
                              }
                          BasisPtr out = kind == ViewKind::ComoduleMorphism ? Z : W;
                          for (int k = 0; k <= 1; ++k)
                              for (int l = 0; l + k <= 1; ++l) {
                                  MultiMap m =
                                      MultiMap::marked_map(V, W, out, k, l, degree, field, true);
                                  testutil::randomize_marked(m, rng);
                                  if (!m.is_zero())
                                      marked.emplace(std::make_pair(k, l), std::move(m));
                              }
                      }
                      CoderivationView view{kind, field, degree, {}, {}};
                      switch (kind) {
                          case ViewKind::Coderivation:
                              if (!plain.empty()) view = make_coderivation_view(std::move(plain));
                              break;
                          case ViewKind::MarkedCoderivation:
                              if (!plain.empty())
                                  view = make_marked_coderivation_view(std::move(plain));
                              break;
                          case ViewKind::ModuleDifferential:
                              if (!plain.empty() || !marked.empty())
                                  view = make_module_differential_view(std::move(plain),
                                                                       std::move(marked));
                              break;
                          case ViewKind::ComoduleMorphism:
                              if (!marked.empty())
                                  view = make_comodule_morphism_view(std::move(marked));
                              break;
                      }
                      ++families;

                      BasisPtr target = kind == ViewKind::ComoduleMorphism ? Z : W;
                      ProjectedComponents back =
                          project_components(view, trunc, V, W, V, target);
                      bool same = back.plain.size() == view.plain.size() &&
                                  back.marked.size() == view.marked.size();
                      if (kind == ViewKind::ModuleDifferential)
                          same = back.marked.size() == view.marked.size();
                      for (const auto& [n, c] : back.plain)
                          same = same && view.plain.count(n) &&
                                 view.plain.at(n).table() == c.table();
                      for (const auto& [kl, c] : back.marked)
                          same = same && view.marked.count(kl) &&
                                 view.marked.at(kl).table() == c.table();
                      ok &= expect(same, "round trip family " + std::to_string(families), detail);

                      std::vector<Word> words =
                          (kind == ViewKind::Coderivation || kind == ViewKind::MarkedCoderivation)
                              ? enumerate_plain_words(V, 5, true)
                              : enumerate_marked_words(V, W, 5);
                      auto res = check_coderivation_identity(view, words);
                      ok &= expect(res.ok, "square family " + std::to_string(families), detail);
                  }
                  return ok;
              });

    criterion(9, "hochschild differentials square to zero; pushforward is a chain map", 30.0,
              [](std::string& detail) {
                  bool ok = true;
                  AlgebraPtr alg = testutil::frobenius_algebra();
                  auto self = std::make_shared<AInfinityBimodule>(self_bimodule(alg));
                  auto dual_self = std::make_shared<AInfinityBimodule>(dual_self_bimodule(alg));
                  TruncationPolicy trunc{4};
                  BasisPtr sA = alg->suspended_basis();
                  BasisPtr sM = suspend(self->module);
                  MultiMap f00 = MultiMap::marked_map(alg->basis, alg->basis, dual_self->module,
                                                      0, 0, 0, Field::Rational);
                  f00.set_unit({"one"}, "t*", Scalar::one(Field::Rational));
                  f00.set_unit({"t"}, "one*", Scalar::one(Field::Rational));
                  BimoduleMorphism pd = from_dg_bimodule_map(self, dual_self, f00);

                  testutil::Rng rng(424242);
                  for (int trial = 0; trial < 20; ++trial) {
                      int degree = rng.pick(-1, 1);
                      PlainFamily comps;
                      for (int n = 1; n <= 2; ++n) {
                          MultiMap c =
                              MultiMap::plain_map(sA, sA, n, degree, Field::Rational, true);
                          testutil::randomize_plain(c, rng);
                          if (!c.is_zero()) comps.emplace(n, std::move(c));
                      }
                      CoderivationView f =
                          comps.empty()
                              ? CoderivationView{ViewKind::Coderivation, Field::Rational, degree,
                                                 {}, {}}
                              : make_coderivation_view(std::move(comps));
                      CoderivationView df = hochschild_differential(*alg, f, trunc);
                      ok &= expect(hochschild_differential(*alg, df, trunc).is_zero(),
                                   "algebra cochain square", detail);

                      PlainFamily mcomps;
                      for (int n = 1; n <= 2; ++n) {
                          MultiMap c =
                              MultiMap::plain_map(sA, sM, n, degree, Field::Rational, true);
                          testutil::randomize_plain(c, rng);
                          if (!c.is_zero()) mcomps.emplace(n, std::move(c));
                      }
                      CoderivationView g =
                          mcomps.empty()
                              ? CoderivationView{ViewKind::MarkedCoderivation, Field::Rational,
                                                 degree, {}, {}}
                              : make_marked_coderivation_view(std::move(mcomps));
                      CoderivationView dg = hochschild_differential(*self, g, trunc);
                      ok &= expect(hochschild_differential(*self, dg, trunc).is_zero(),
                                   "module cochain square", detail);

                      CoderivationView lhs =
                          pushforward(pd, hochschild_differential(*self, g, trunc), trunc);
                      CoderivationView rhs =
                          hochschild_differential(*dual_self, pushforward(pd, g, trunc), trunc);
                      bool same = lhs.plain.size() == rhs.plain.size();
                      for (const auto& [n, c] : lhs.plain)
                          same = same && rhs.plain.count(n) &&
                                 rhs.plain.at(n).table() == c.table();
                      ok &= expect(same, "pushforward chain map", detail);
                  }
                  return ok;
              });

    criterion(10, "combinatorial differential realizes the operator definition, k+l <= 3", 30.0,
              [](std::string& detail) {
                  bool ok = true;
                  AlgebraPtr alg = testutil::frobenius_algebra(Field::ModTwo);
                  InfinityInnerProduct ip = testutil::frobenius_pairing(alg);
                  for (auto [k, l] : shapes_up_to(3)) {
                      NaturalityReport r = naturality_check(enumerate_faces(k, l), *alg, ip);
                      ok &= expect(r.ok,
                                   "shape (" + std::to_string(k) + "," + std::to_string(l) + ")",
                                   detail);
                  }
                  return ok;
              });

    std::cout << (failures == 0 ? "all criteria passed\n"
                                : std::to_string(failures) + " criteria failed\n");
    return failures == 0 ? 0 : 1;
}
