#include <gtest/gtest.h>

#include <functional>
#include <string>

#include "multilin/json_io.hpp"

using namespace multilin;
using io::Json;

namespace {

std::string schema_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const SchemaError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Json, RationalForms) {
  EXPECT_EQ(io::rational_from_json(Json(3)), Rational(3));
  EXPECT_EQ(io::rational_from_json(Json("-3/7")), Rational(-3, 7));
  EXPECT_EQ(io::rational_from_json(Json("12")), Rational(12));
  EXPECT_EQ(io::to_json(Rational(4, 6)), Json("2/3"));
  EXPECT_THROW(io::rational_from_json(Json(1.5)), SchemaError);
  EXPECT_THROW(io::rational_from_json(Json("a/b")), SchemaError);
}

TEST(Json, SymRoundTrip) {
  SymMatrix a(2, 3, 2, 1);
  a.set({1, 1}, {0, 0, 1}, Rational(-5, 3));
  a.set({2, 0}, {1, 0, 0}, 7);
  const Json j = io::to_json(a);
  EXPECT_EQ(j["entries"].size(), 2u);
  EXPECT_EQ(j["entries"][0]["row"], Json::array({2, 0}));
  EXPECT_EQ(io::sym_from_json(j), a);
  EXPECT_EQ(io::sym_from_json(Json::parse(j.dump(2))), a);
}

TEST(Json, AltRoundTrip) {
  AltMatrix a(3, 4, 2, 3);
  a.set(StrictIndex({1, 3}, 3), StrictIndex({2, 3, 4}, 4), Rational(1, 9));
  EXPECT_EQ(io::alt_from_json(io::to_json(a)), a);
}

TEST(Json, DenseRoundTrip) {
  const DenseMatrix m{{1, Rational(1, 2)}, {0, -3}};
  EXPECT_EQ(io::dense_from_json(io::to_json(m)), m);
  EXPECT_THROW(io::dense_from_json(Json::parse(R"({"rows":2,"cols":1,"entries":[["1"]]})")), SchemaError);
}

TEST(Json, PolyMapRoundTrip) {
  const PolyMap m = PolyMap::affine(DenseMatrix{{2, 1}, {1, 1}}, {3, -1});
  EXPECT_EQ(io::polymap_from_json(io::to_json(m)), m);
}

TEST(Json, MultimapRoundTrip) {
  const SymMultiMap s(SymMatrix::from_linear(DenseMatrix{{1, 2}}));
  EXPECT_EQ(io::sym_multimap_from_json(io::to_json(s)), s);
  const AltMultiMap a(AltMatrix::from_linear(DenseMatrix{{1, 2}}));
  EXPECT_EQ(io::alt_multimap_from_json(io::to_json(a)), a);
  const BilinearMap c = BilinearMap::from_coefficients(1, 1, 2, {1, -1});
  const BilinearMap back = io::bilinear_from_json(io::to_json(c), 0);
  EXPECT_EQ(back.matrix(), c.matrix());
  EXPECT_EQ(back.first_dim(), 1);
}

TEST(Json, KeysAreSorted) {
  const std::string s = io::to_json(SymMatrix::unit(1, 1)).dump();
  EXPECT_EQ(s, R"({"entries":[{"col":[0],"row":[0],"value":"1/1"}],"kind":"sym","n":1,"n_prime":1,"p":0,"p_prime":0})");
}

TEST(Json, ErrorsNameTheField) {
  const Json base = Json::parse(R"({"kind":"sym","n":2,"n_prime":2,"p":1,"p_prime":1,
      "entries":[{"row":[1,0],"col":[0,1],"value":"2"}]})");
  EXPECT_NO_THROW(io::sym_from_json(base));

  Json j = base;
  j.erase("n_prime");
  EXPECT_NE(schema_message([&] { io::sym_from_json(j); }).find("$.n_prime"), std::string::npos);

  j = base;
  j["kind"] = "alt";
  EXPECT_NE(schema_message([&] { io::sym_from_json(j); }).find("$.kind"), std::string::npos);

  j = base;
  j["entries"][0]["row"] = Json::array({1, 1});
  EXPECT_NE(schema_message([&] { io::sym_from_json(j); }).find("$.entries[0].row"), std::string::npos);

  j = base;
  j["entries"].push_back(j["entries"][0]);
  EXPECT_NE(schema_message([&] { io::sym_from_json(j); }).find("duplicate"), std::string::npos);

  j = base;
  j["entries"][0]["value"] = "1/0";
  EXPECT_THROW(io::sym_from_json(j), Error);

  j = base;
  j["n"] = -1;
  EXPECT_NE(schema_message([&] { io::sym_from_json(j); }).find("$.n"), std::string::npos);
}

TEST(Json, AltIndexMustIncrease) {
  const Json j = Json::parse(R"({"kind":"alt","n":3,"n_prime":3,"p":2,"p_prime":1,
      "entries":[{"row":[2,1],"col":[1],"value":"1"}]})");
  EXPECT_NE(schema_message([&] { io::alt_from_json(j); }).find("strictly increase"), std::string::npos);
}

TEST(Json, PolyMapBlockChecks) {
  const Json j = Json::parse(R"({"n_in":1,"n_out":1,"blocks":[
      {"kind":"sym","n":1,"n_prime":1,"p":2,"p_prime":1,"entries":[]}]})");
  EXPECT_NE(schema_message([&] { io::polymap_from_json(j); }).find("$.blocks[0].p"), std::string::npos);
  const Json dup = Json::parse(R"({"n_in":1,"n_out":1,"blocks":[
      {"kind":"sym","n":1,"n_prime":1,"p":1,"p_prime":1,"entries":[]},
      {"kind":"sym","n":1,"n_prime":1,"p":1,"p_prime":1,"entries":[]}]})");
  EXPECT_NE(schema_message([&] { io::polymap_from_json(dup); }).find("duplicate"), std::string::npos);
}

TEST(Json, MultimapArityMustMatch) {
  Json j = io::to_json(SymMultiMap(SymMatrix::from_linear(DenseMatrix{{1}})));
  j["arity"] = 2;
  EXPECT_NE(schema_message([&] { io::sym_multimap_from_json(j); }).find("$.arity"), std::string::npos);
}
