#include "doctest.h"

#include "dfb/resolution.hpp"

using namespace dfb;

namespace {
QRingPtr ring3(std::vector<int> w, std::string f) {
  return make_ring(Field::rationals(), {"x", "y", "z"}, w, {f});
}
}  // namespace

TEST_CASE("residue field resolutions over the ADE surfaces") {
  struct Case {
    std::vector<int> w;
    std::string f;
  };
  for (const auto& c : {Case{{1, 1, 1}, "x^2+y^2+z^2"}, Case{{3, 3, 2}, "x^2+y^2+z^3"}, Case{{2, 2, 1}, "x^2+y^2+z^4"},
                        Case{{3, 2, 2}, "x^2+y^2*z+z^3"}, Case{{6, 4, 3}, "x^2+y^3+z^4"}}) {
    auto A = ring3(c.w, c.f);
    auto k = residue_field(A);
    auto F = free_resolution(k, 4);
    CHECK(F->betti() == std::vector<int>{1, 3, 4, 4, 4});
    auto chk = verify_resolution(*F);
    CHECK(chk.ok());
  }
}

TEST_CASE("Koszul complex over a polynomial ring") {
  auto A = make_ring(Field::rationals(), {"x", "y"}, {1, 1}, {});
  auto F = free_resolution(residue_field(A), 3);
  CHECK(F->betti() == std::vector<int>{1, 2, 1, 0});
  auto free = free_resolution(ring_module(A), 3);
  CHECK(free->betti() == std::vector<int>{1, 0, 0, 0});
}

TEST_CASE("hilbert function of small modules") {
  auto A = ring3({1, 1, 1}, "x^2+y^2+z^2");
  auto k = residue_field(A);
  CHECK(k->hilbert_function(0) == 1);
  for (int d = 1; d < 5; ++d) CHECK(k->hilbert_function(d) == 0);
  CHECK(k->krull_dimension() == 0);
  auto zero = PresentedModule::make(Matrix::identity(A, {0}));
  CHECK(zero->is_zero());
  CHECK(zero->hilbert_function(0) == 0);
  auto m = maximal_ideal(A);
  CHECK(m->krull_dimension() == 2);
  CHECK(m->num_gens() == 3);
  CHECK(m->hilbert_function(0) == 0);
  CHECK(m->hilbert_function(1) == 3);
  CHECK(m->hilbert_function(2) == 5);
}

TEST_CASE("pruning removes unit relations") {
  auto A = ring3({1, 1, 1}, "x*y-z^2");
  // generators e0 (deg 0), e1 (deg 1); relations e1 - x e0, y e1
  Matrix p(A, {0, 1}, {1, 2});
  p.set(0, 0, A->parse("-x"));
  p.set(1, 0, A->parse("1"));
  p.set(1, 1, A->parse("y"));
  auto M = PresentedModule::make(p);
  auto pr = prune(M);
  CHECK(pr.module->num_gens() == 1);
  CHECK(pr.kept == std::vector<int>{0});
  // old e1 = x e0
  CHECK(pr.to_min.at(0, 1) == A->parse("x"));
  // result is A/(xy)
  CHECK(pr.module->num_relations() == 1);
  CHECK(pr.module->presentation().at(0, 0) == A->parse("x*y"));
}
