#include <doctest.h>

#include "plumbstein/errors.hpp"
#include "plumbstein/serialize.hpp"
#include "support.hpp"

using namespace plumbstein;

namespace {

template <typename T>
T round_trip(const T& x) {
  const std::string text = json(x).dump();
  return json::parse(text).get<T>();
}

}  // namespace

TEST_CASE("integers beyond 64 bits travel as strings") {
  const Integer big = Integer(1) << 100;
  CHECK(integer_to_json(big).is_string());
  CHECK(integer_to_json(Integer(-42)).is_number_integer());
  CHECK(integer_from_json(integer_to_json(big)) == big);
  CHECK(integer_from_json(integer_to_json(-big)) == -big);
  CHECK_THROWS_AS(integer_from_json(json(1.5)), DomainError);
}

TEST_CASE("graphs, reports and arithmetic records round trip") {
  for (const auto& name : support::all_fixtures()) {
    const PlumbingGraph g = support::fixture(name);
    CHECK(round_trip(g) == g);
    CHECK(round_trip(validate(g)) == validate(g));
  }
  const ValidationReport bad = validate(support::fixture("bad.plumb"));
  CHECK(round_trip(bad) == bad);

  std::mt19937 rng(79);
  for (int trial = 0; trial < 50; ++trial) {
    ContinuedFraction c = support::random_cf(rng, 1, 6, 9);
    c.coefficients.back() *= Integer("123456789012345678901234567890");
    CHECK(round_trip(c) == c);
    CHECK(round_trip(ncf_eval(c)) == ncf_eval(c));
    CHECK(round_trip(chain_gluing_matrix(c)) == chain_gluing_matrix(c));
    const ChainIdentityReport r = verify_chain_identity(c);
    CHECK(round_trip(r) == r);
  }
  CHECK(round_trip(Fraction::infinity()) == Fraction::infinity());
}

TEST_CASE("embeddings, dual graphs and wrapped forms round trip") {
  std::mt19937 rng(83);
  for (int trial = 0; trial < 30; ++trial) {
    const PlumbingGraph g = support::decorate(support::random_planar_cluster(rng, 14), rng);
    const PlanarEmbedding emb = std::get<PlanarEmbedding>(planar_embed(g));
    const DualGraph d = dual_graph(emb);
    CHECK(round_trip(emb) == emb);
    CHECK(round_trip(d) == d);
    CHECK(round_trip(hamiltonian_path(d)) == hamiltonian_path(d));
    const WrappedForm w = wrap(g);
    CHECK(round_trip(w) == w);
  }
}

TEST_CASE("diagrams round trip") {
  for (const auto& name : support::all_fixtures()) {
    CAPTURE(name);
    const PlumbingGraph g = support::fixture(name);
    const HandlebodyDiagram h = assemble(g);
    CHECK(round_trip(h) == h);
    std::vector<Stabilization> choice;
    for (const auto& v : g.vertices()) choice.push_back(stabilization_for(v.weight, 2 + v.weight));
    const LegendrianDiagram l = legendrianize(h, choice);
    CHECK(round_trip(l) == l);
    const json j = l;
    CHECK(j["two_handles"][0].contains("tb"));
    CHECK(j["two_handles"][0].contains("rot"));
  }
}

TEST_CASE("torsion records, tori and decompositions round trip") {
  std::mt19937 rng(89);
  for (int trial = 0; trial < 20; ++trial) {
    const FamilyY y = support::random_family_y(rng);
    CHECK(round_trip(y) == y);
    for (const TwistingAssignment& a : enumerate_twisting_signs(y)) CHECK(round_trip(a) == a);
  }
  for (const auto& name : support::all_fixtures()) {
    const PlumbingGraph g = support::fixture(name);
    const auto tori = torus_classes(g);
    CHECK(tori_from_json(g, json::parse(tori_to_json(g, tori).dump())) == tori);
    const Decomposition d = decompose(g);
    CHECK(decomposition_from_json(g, json::parse(decomposition_to_json(g, d).dump())) == d);
  }
  CHECK_THROWS_AS(json::parse(R"({"chain":[3,2],"legs":[[2]]})").get<FamilyY>(), DomainError);
}

TEST_CASE("unknown vertex ids in JSON are rejected") {
  const PlumbingGraph g = support::fixture("lens.plumb");
  CHECK_THROWS_AS(tori_from_json(g, json::parse(R"([{"path":["l1","zz"],"edges":[0]}])")), DomainError);
}
