#include <catch_amalgamated.hpp>

#include <filesystem>

#include "bracoid/descriptor.hpp"
#include "bracoid/io.hpp"

using namespace bracoid;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "bracoid_test_io";
  fs::create_directories(dir);
  return dir / name;
}

ErrorKind parse_kind(const std::string& text) {
  try {
    structure_from_json(parse_json_text(text, "inline"));
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("parsed: " << text);
  return ErrorKind::InvalidParameter;
}

std::string message_of(const std::string& text) {
  try {
    structure_from_json(parse_json_text(text, "inline"));
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

const char* kC2 = R"({"name": "C2", "order": 2, "elements": ["e", "t"], "table": [[0, 1], [1, 0]]})";

}  // namespace

TEST_CASE("canonical layout") {
  const auto text = to_canonical_string(to_json(cyclic(2)));
  CHECK(text ==
        "{\n"
        "  \"name\": \"C2\",\n"
        "  \"order\": 2,\n"
        "  \"elements\": [\"g^0\", \"g^1\"],\n"
        "  \"table\": [\n"
        "    [0, 1],\n"
        "    [1, 0]\n"
        "  ]\n"
        "}\n");
  CHECK(to_canonical_string(Json::array()) == "[]\n");
  CHECK(to_canonical_string(Json::object()) == "{}\n");
}

TEST_CASE("structures round-trip byte for byte") {
  const Structure samples[] = {
      dihedral_example({3, 3, 3}),
      dihedral_example({2, 2, 2}).left(),
      dihedral_example({2, 4, 2}).right(),
      trivial_brace(dihedral(3)),
      make_left_bracoid(left_translation(cyclic(1))),
  };
  int i = 0;
  for (const auto& s : samples) {
    const auto path = temp_file("sample" + std::to_string(i++) + ".json").string();
    store_structure(s, path);
    const auto first = read_file(path);
    const auto loaded = load_structure(path);
    CHECK(loaded.index() == s.index());
    CHECK(loaded == s);
    store_structure(loaded, path);
    CHECK(read_file(path) == first);
  }
}

TEST_CASE("group parsing") {
  const auto g = group_from_json(Json::parse(kC2));
  CHECK(g.label() == "C2");
  CHECK(g.element_name(1) == "t");
  CHECK(to_canonical_string(to_json(g)) == to_canonical_string(to_json(group_from_json(to_json(g)))));
  CHECK(group_from_json(to_json(FiniteGroup{})).order() == 1);

  auto bad = Json::parse(kC2);
  bad["table"] = {{0, 1}, {0, 1}};
  CHECK_THROWS_AS(group_from_json(bad), Error);
  bad["table"] = {{0, 1}, {1, 2}};
  try {
    group_from_json(bad, "G");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IndexOutOfRange);
    CHECK(std::string(e.what()).find("G.table[1][1]") != std::string::npos);
  }
  bad["table"] = {{0, 1}};
  CHECK_THROWS_AS(group_from_json(bad), Error);
  bad = Json::parse(kC2);
  bad["order"] = 3;
  CHECK_THROWS_AS(group_from_json(bad), Error);
  bad = Json::parse(kC2);
  bad["elements"] = {"e", 1};
  CHECK_THROWS_AS(group_from_json(bad), Error);
}

TEST_CASE("structure parsing errors are positional") {
  const std::string left =
      std::string(R"({"G": )") + kC2 + R"(, "N": )" + kC2 + R"(, "left_action": [[0, 1], [1, 2]]})";
  CHECK(parse_kind(left) == ErrorKind::IndexOutOfRange);
  CHECK(message_of(left).find("left_action[1][1]") != std::string::npos);

  const std::string short_rows = std::string(R"({"G": )") + kC2 + R"(, "N": )" + kC2 + R"(, "left_action": [[0, 1]]})";
  CHECK(parse_kind(short_rows) == ErrorKind::Shape);

  const std::string no_n = std::string(R"({"G": )") + kC2 + R"(, "left_action": [[0, 1], [1, 0]]})";
  CHECK(parse_kind(no_n) == ErrorKind::Parse);
  CHECK(message_of(no_n).find("\"N\"") != std::string::npos);

  CHECK(parse_kind(R"({"foo": 1})") == ErrorKind::Parse);
  CHECK(parse_kind("[1, 2]") == ErrorKind::Parse);
  CHECK_THROWS_AS(parse_json_text("{\"G\": ", "inline"), Error);
  CHECK_THROWS_AS(load_structure(temp_file("missing.json").string() + ".nope"), Error);

  const std::string brace = std::string(R"({"star": )") + kC2 + R"(, "dot": )" + kC2 + "}";
  CHECK(std::holds_alternative<SkewBrace>(structure_from_json(Json::parse(brace))));

  // Axiom failures load fine; checking them is the verifier's job.
  const std::string not_transitive =
      std::string(R"({"G": )") + kC2 + R"(, "N": )" + kC2 + R"(, "left_action": [[0, 1], [0, 1]]})";
  const auto s = structure_from_json(Json::parse(not_transitive));
  CHECK(std::holds_alternative<SkewLeftBracoid>(s));
}

TEST_CASE("report and verdict JSON") {
  CheckReport r;
  r.add("p", std::nullopt);
  r.add("q", WitnessList{"a=1"});
  r.add_not_applicable("s");
  CHECK(to_json(r).dump() ==
        R"([{"property":"p","status":"pass","witness":null},{"property":"q","status":"fail","witness":["a=1"]},)"
        R"({"property":"s","status":"not_applicable","witness":null}])");

  VerdictBuilder vb("thm");
  vb.hypothesis("h", std::nullopt).conclusion("c", std::nullopt);
  CHECK(to_json(std::move(vb).finish()).dump() ==
        R"({"theorem":"thm","hypotheses":{"h":true},"conclusion":true,"witness":null,"flag":"ok"})");

  VerdictBuilder na("thm");
  na.hypothesis("h", WitnessList{"x"});
  CHECK(to_json(std::move(na).finish()).dump() ==
        R"({"theorem":"thm","hypotheses":{"h":false},"conclusion":null,"witness":["statement=h","x"],"flag":"not_applicable"})");
}

TEST_CASE("enumeration result JSON") {
  EnumerationResult<SkewLeftBracoid> r{{make_left_bracoid(left_translation(cyclic(2)))}, 1, std::nullopt};
  auto j = to_json(r);
  CHECK(j["raw_count"] == 1);
  CHECK(j["iso_class_count"].is_null());
  CHECK(j["structures"].size() == 1);
  CHECK_FALSE(to_json(r, false).contains("structures"));
  r.iso_class_count = 1;
  CHECK(to_json(r)["equivalence"].get<std::string>().rfind("artifact-defined", 0) == 0);
}

TEST_CASE("group descriptors") {
  CHECK(parse_group_descriptor("C4", 12).same_structure(cyclic(4)));
  CHECK(parse_group_descriptor("D3", 12).order() == 6);
  CHECK(parse_group_descriptor(" GT2 ", 12).same_structure(presented_G(2)));
  CHECK(parse_group_descriptor("HW2", 12).same_structure(presented_H(2)));
  CHECK(parse_group_descriptor("C2 x C2", 12).same_structure(direct_product(cyclic(2), cyclic(2))));
  CHECK(parse_group_descriptor("C2xC3", 12).same_structure(direct_product(cyclic(2), cyclic(3))));
  CHECK(parse_group_descriptor("C2 x C2 x C2", 12).order() == 8);

  const auto path = temp_file("group.json").string();
  write_file(path, to_canonical_string(to_json(dihedral(4))));
  CHECK(parse_group_descriptor("@" + path, 12).same_structure(dihedral(4)));

  for (const char* bad : {"", "Q8", "C0", "C", "C-1", "D2.5", "C2 x", "x C2", "GT"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_group_descriptor(bad, 12), Error);
  }
  try {
    parse_group_descriptor("C13", 12);
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderCapExceeded);
  }
  CHECK_THROWS_AS(parse_group_descriptor("C4 x C4", 12), Error);
  CHECK_THROWS_AS(parse_group_descriptor("GT4", 12), Error);
}
