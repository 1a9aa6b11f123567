#include <gtest/gtest.h>

#include "properties.hpp"

using namespace schur;

namespace {

void expect_sound(const SearchSpec& s, const CnfOptions& o, const std::string& label) {
  prop::Tally t;
  prop::cnf_soundness(s, o, label, t);
  EXPECT_EQ(t.failures, 0) << t.first;
}

void expect_clean(const prop::Tally& t) {
  EXPECT_GT(t.checked, 0);
  EXPECT_EQ(t.failures, 0) << t.failures << " failures; first: " << t.first;
}

}  // namespace

TEST(CnfSoundness, EnumeratorMatchesTruthTable) {
  for (int p = 1; p <= 6; ++p) {
    for (int n = 1; n <= 3; ++n) {
      if (p * n > 16) continue;
      SearchSpec s;
      s.length = p;
      s.num_colors = n;
      const CnfInstance inst = encode_cnf(s);
      long table = 0, backtrack = 0;
      std::vector<bool> a(inst.num_vars + 1);
      for (std::uint32_t bits = 0; bits < (1u << inst.num_vars); ++bits) {
        for (int v = 1; v <= inst.num_vars; ++v) a[v] = (bits >> (v - 1)) & 1;
        table += prop::satisfies(inst, a);
      }
      prop::AllModels(inst).run([&](const std::vector<bool>&) { ++backtrack; });
      EXPECT_EQ(table, backtrack) << p << " " << n;
    }
  }
}

TEST(CnfSoundness, PartitionsUpToTenThreeColors) { expect_clean(prop::cnf_partition_sweep()); }

TEST(CnfSoundness, STemplatesUpToTenThreeColors) { expect_clean(prop::cnf_s_template_sweep()); }

TEST(CnfSoundness, WSTemplatesUpToTenThreeColors) { expect_clean(prop::cnf_ws_template_sweep()); }

TEST(CnfSoundness, MinElementAndPrefixUnits) {
  SearchSpec s;
  s.length = 9;
  s.num_colors = 3;
  s.min_element = {1, 2, 5};
  expect_sound(s, {}, "min");
  s.min_element.clear();
  s.fixed_prefix = {1, 2, 2};
  expect_sound(s, {}, "prefix");
}

TEST(CnfSoundness, EncoderAgreesWithSearchEngine) {
  for (int p = 1; p <= 9; ++p) {
    SearchSpec s;
    s.kind = TargetKind::ws_template;
    s.length = p;
    s.tail = std::max(1, p / 3);
    s.num_colors = 3;
    s.special_policy = SpecialPolicy::last;
    if (s.length <= s.tail) continue;
    std::set<std::vector<Color>> engine;
    SearchOptions o;
    o.canonical_colors = false;
    enumerate_colorings(s, o, [&](const Found& f) {
      engine.insert(prop::colors_of(f.coloring));
      return true;
    });
    EXPECT_EQ(engine, prop::accepted_by_verifiers(s, false)) << p;
  }
}

TEST(Dimacs, RoundTripThroughText) {
  SearchSpec s;
  s.kind = TargetKind::s_template;
  s.length = 12;
  s.num_colors = 3;
  s.special_policy = SpecialPolicy::last;
  s.symmetric = true;
  s.min_element = {0, 2, 3};
  s.fixed_prefix = {1};
  const CnfInstance inst = encode_cnf(s, CnfOptions{true, false});
  const std::string text = write_dimacs(inst);
  EXPECT_EQ(text.rfind("c schur cnf v1\n", 0), 0u);
  EXPECT_NE(text.find("p cnf " + std::to_string(inst.num_vars) + " " + std::to_string(inst.clauses.size())),
            std::string::npos);
  const CnfInstance back = parse_dimacs(text);
  EXPECT_EQ(back.clauses, inst.clauses);
  EXPECT_EQ(back.num_vars, inst.num_vars);
  EXPECT_EQ(spec_echo(back), spec_echo(inst));
}

TEST(Dimacs, ModelParsing) {
  SearchSpec s;
  s.length = 4;
  s.num_colors = 2;
  const CnfInstance inst = encode_cnf(s);
  const auto a = parse_model("c comment\ns SATISFIABLE\nv 1 -2 -3 4\nv -5 6 7 -8 0\n", inst.num_vars);
  const Found f = decode_model(inst, a);
  EXPECT_EQ(f.coloring, Coloring({1, 2, 2, 1}, 2));
  EXPECT_EQ(parse_model("SAT\n1 -2 -3 4 -5 6 7 -8 0\n", inst.num_vars), a);
  EXPECT_THROW(parse_model("s UNSATISFIABLE\n", inst.num_vars), ParseError);
  EXPECT_THROW(parse_model("v 1 x 0\n", inst.num_vars), ParseError);
  EXPECT_THROW(parse_model("v 99 0\n", inst.num_vars), ParseError);
  EXPECT_THROW(parse_model("c nothing\n", inst.num_vars), ParseError);
}

TEST(Dimacs, DecodeRejectsNonModels) {
  SearchSpec s;
  s.length = 5;
  s.num_colors = 2;
  const CnfInstance inst = encode_cnf(s);
  const auto a = encode_assignment(inst, Coloring({1, 2, 2, 1, 1}, 2));
  try {
    decode_model(inst, a);
    FAIL() << "expected a decode error";
  } catch (const DecodeError& e) {
    EXPECT_GE(e.clause(), 0);
  }
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2 0\n"), ParseError);
}

TEST(Dimacs, EncodingNeedsDeterminedSpecial) {
  SearchSpec s;
  s.kind = TargetKind::s_template;
  s.length = 5;
  s.num_colors = 2;
  EXPECT_THROW(encode_cnf(s), DomainError);
  s.special_policy = SpecialPolicy::last;
  EXPECT_NO_THROW(encode_cnf(s));
  SearchSpec open;
  open.num_colors = 2;
  EXPECT_THROW(encode_cnf(open), DomainError);
}
