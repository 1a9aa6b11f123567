#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "properties.hpp"

using namespace schur;

namespace {

constexpr int kSamples = 200;

PartitionDoc load(const std::string& file) {
  std::ifstream in(oracle::data_path(file));
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_doc(ss.str());
}

}  // namespace

// Each construction on 200 random valid inputs, re-checked by the naive oracles.
class RandomInputs : public ::testing::TestWithParam<std::size_t> {};

TEST_P(RandomInputs, OutputsPassTheOracles) {
  const auto& sweep = prop::construction_sweeps()[GetParam()];
  const prop::Tally t = sweep.run(100 + GetParam(), kSamples);
  EXPECT_EQ(t.checked, kSamples) << sweep.name;
  EXPECT_EQ(t.failures, 0) << sweep.name << ": " << t.first;
}

INSTANTIATE_TEST_SUITE_P(Constructions, RandomInputs, ::testing::Range<std::size_t>(0, prop::construction_sweeps().size()),
                         [](const auto& info) { return prop::camel(prop::construction_sweeps()[info.param].name); });

TEST(ExpandSchur, DefaultTailPassesThePredicates) {
  prop::Inputs in(103);
  for (int i = 0; i < kSamples; ++i) {
    const STemplate t = in.s_template();
    std::vector<Color> prefix;
    for (int u = 1; u < t.special_min(); ++u) prefix.push_back(t.coloring()(u));
    if (prefix.size() >= static_cast<std::size_t>(t.width())) continue;
    EXPECT_FALSE(check_schur_tail(t, prefix));
  }
}

TEST(ExpandSchur, RejectsNonSumFreeInner) {
  const STemplate t = make_s_template(Coloring({1, 2, 1}, 2), 1);
  EXPECT_THROW(expand_schur(t, Coloring({1, 1}, 1)), VerificationError);
}

TEST(Corpus, Table5TimesSmallPartition) {
  const STemplate t5 = s_template_from_doc(load("table5.schur"));
  const auto out = expand_schur(t5, Coloring({1, 2, 2, 1}, 2));
  EXPECT_EQ(out.value.length(), 4 * 33 + 6);
  EXPECT_FALSE(verify_sum_free(out.value));
}

TEST(Corpus, Table8WithTailGivesConstant24) {
  const WSTemplate t8 = ws_template_from_doc(load("table8.schur"));
  const PartitionDoc tail = load("table8_tail.schur");
  EXPECT_EQ(best_additive_constant(t8), 23);
  EXPECT_EQ(best_additive_constant(t8, tail.coloring.colors()), 24);
  const auto out = expand_weak_with_tail(t8, load("s4_44.schur").coloring, tail.coloring.colors());
  EXPECT_EQ(out.value.length(), 42 * 44 + 24);
  EXPECT_FALSE(verify_weakly_sum_free(out.value));
}

TEST(Corpus, Table5ComposedWithLiftKeepsTailB) {
  const STemplate t5 = s_template_from_doc(load("table5.schur"));
  const auto lifted = lift_weak_to_ws_template(Coloring({1, 1}, 1));
  const auto out = compose_s_ws_templates(t5, lifted.value);
  EXPECT_EQ(out.value.width(), 132);
  EXPECT_EQ(out.value.tail(), 2);
  EXPECT_EQ(best_additive_constant(out.value), 26);
}

TEST(Corpus, ProvenanceIsEmbeddedInOutputDocs) {
  const STemplate t5 = s_template_from_doc(load("table5.schur"));
  const auto out = expand_schur(t5, Coloring({1, 2, 2, 1}, 2));
  const std::string text = serialize_doc(to_doc(out, DocKind::sumfree));
  EXPECT_NE(text.find("# operation: schur expansion"), std::string::npos);
  EXPECT_NE(text.find("# length: 138 = 33*p + 6"), std::string::npos);
  EXPECT_NE(text.find("# verified: ok"), std::string::npos);
  EXPECT_EQ(parse_doc(text).coloring, out.value);
}
