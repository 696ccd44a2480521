#include <doctest.h>

#include "arthurkit/text.hpp"
#include "fixtures.hpp"

using namespace arthurkit;
using namespace fx;

namespace {

const char* kSample = R"(# sample
group Sp 1
rho r dim 1 parity O unramified
param r S1 S3
ems r [1,-1] l=1 eta=+
ldata L( D(r,-1,-1) ; phi = r*S1 )
group SO 1
ldata L( D(r,-1/2,-1/2) ; phi = 0 )
)";

}  // namespace

TEST_CASE("parse a workspace") {
  Workspace ws = parse_workspace(kSample);
  REQUIRE(ws.group);
  CHECK(*ws.group == sp(1));
  REQUIRE(ws.objects.size() == 4);
  CHECK(ws.objects[0].line == 4);
  CHECK(ws.objects[0].kind() == ObjectKind::Param);
  CHECK(ws.objects[1].kind() == ObjectKind::Ems);
  CHECK(ws.objects[2].kind() == ObjectKind::LData);
  RhoSymbol r = rho_o();
  CHECK(std::get<ArthurParameter>(ws.objects[0].value).summands == param(sp(1), {{r, 1, 3}}).summands);
  CHECK(std::get<ExtendedMultiSegment>(ws.objects[1].value) == ems(sp(1), r, {row(i(1), i(-1), 1, 1)}));
  CHECK(std::get<LData>(ws.objects[2].value) ==
        make_ldata(sp(1), {seg(r, i(-1), i(-1))}, tempered({{r, 1, 1, 1}})));
  CHECK(group_of(ws.objects[3].value) == so(1));
}

TEST_CASE("serialization round trip") {
  Workspace ws = parse_workspace(kSample);
  std::string once = serialize_workspace(ws);
  Workspace again = parse_workspace(once);
  CHECK(serialize_workspace(again) == once);
  REQUIRE(again.objects.size() == ws.objects.size());
  for (std::size_t k = 0; k < ws.objects.size(); ++k) CHECK(again.objects[k].value == ws.objects[k].value);
}

TEST_CASE("serialized forms") {
  RhoSymbol r = rho_o();
  CHECK(serialize(param(sp(2), {{r, 2, 1, Rational(1, 4)}, {r, 2, 1, Rational(-1, 4)}, {r, 1, 1}})) ==
        "param r @-1/4 S2 S1 ; r S1 S1 ; r @1/4 S2 S1");
  CHECK(serialize(ems(so(1), r, {row(h(1), h(-1), 1, 1)})) == "ems r [1/2,-1/2] l=1 eta=+");
  CHECK(serialize(make_ldata(sp(2), {}, tempered({{r, 3, 1, -1}, {rho_o("q"), 1, 1, -1}, {r, 1, 1, 1}}))) ==
        "ldata L( ; phi = q*S1 + r*S1 + r*S3 ; eps = q*S1:-, r*S1:+, r*S3:- )");
  CHECK(serialize_rho(RhoSymbol::non_self_dual("sig", "sigv")) == "rho sig dim 1 parity N dual sigv");
}

TEST_CASE("eps defaults to trivial") {
  Workspace ws = parse_workspace("group Sp 1\nrho r dim 1 parity O\nldata L( ; phi = r*S3 ; eps = 1 )\n");
  CHECK(std::get<LData>(ws.objects[0].value).tempered.all_signs_trivial());
}

TEST_CASE("non-self-dual rho declares its dual") {
  Workspace ws = parse_workspace("group Sp 1\nrho sig dim 1 parity N dual sigv\nparam sig S1 S1 ; sigv S1 S1 ; sig S1 S1\n");
  CHECK(ws.rhos.count("sigv") == 1);
  CHECK(ws.rhos.at("sigv").dual_label == "sig");
}

TEST_CASE("errors carry positions") {
  auto message = [](const char* text) {
    try {
      parse_workspace(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("param r S1 S1\n").rfind("line 1, column 6: objects need a preceding group line", 0) == 0);
  CHECK(message("group Sp 1\nparam r S1 S3\n").rfind("line 2, column", 0) == 0);
  CHECK(message("group Sp 1\nparam r S1 S3\n").find("undeclared rho 'r'") != std::string::npos);
  CHECK(message("group Sp 1\nrho r dim 1 parity O\nrho r dim 2 parity O\n").find("conflicting") != std::string::npos);
  CHECK(message("group Sp 0\n").find("rank must be positive") != std::string::npos);
  CHECK(message("group Sp 1\nrho r dim 1 parity O\nems r [1,-1] l=1 eta=+ ; q [0,0] l=0 eta=+\n").find("undeclared") !=
        std::string::npos);
  CHECK(message("group Sp 1\nrho r dim 1 parity O\nrho q dim 1 parity O\n"
                "ems r [0,0] l=0 eta=+ ; q [0,0] l=0 eta=+ ; r [0,0] l=0 eta=+\n")
            .find("contiguous") != std::string::npos);
  CHECK(message("group Sp 1\nrho r dim 1 parity O\nparam r @1/2 S1 S3\n").find("|x| < 1/2") != std::string::npos);
  CHECK(message("group Sp 1\nrho r dim 1 parity O\nldata L( D(r,1,1) ; phi = r*S1 )\n").find("x + y < 0") !=
        std::string::npos);
  CHECK(message("frob\n").find("unknown directive") != std::string::npos);
}

TEST_CASE("json rendering") {
  Workspace ws = parse_workspace(kSample);
  nlohmann::json j = to_json(ws);
  CHECK(j["group"]["family"] == "Sp");
  CHECK(j["objects"].size() == 4);
  CHECK(j["objects"][0]["kind"] == "param");
  CHECK(j["objects"][0]["summands"][0]["b"] == 3);
  CHECK(j["objects"][1]["rows"][0]["A"] == "1");
  CHECK(j["objects"][2]["segments"][0]["x"] == "-1");
  CHECK(j["objects"][3]["group"]["family"] == "SO");
  CHECK(j["objects"][3]["phi"].empty());
}
