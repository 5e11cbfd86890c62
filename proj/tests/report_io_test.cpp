#include <gtest/gtest.h>

#include "hwiener/constructors.hpp"
#include "hwiener/extremal.hpp"
#include "hwiener/indices.hpp"
#include "hwiener/report_io.hpp"

using namespace hwiener;

TEST(IndexJson, ExactAsStringFloatAsNumber) {
  const auto w = wiener(g_rn(3, 6));
  const auto j = to_json(w);
  EXPECT_EQ(j.at("value"), "31");
  EXPECT_EQ(j.at("mode"), "exact");
  EXPECT_TRUE(to_json(harary(path(3))).at("value").is_number());
  EXPECT_EQ(to_json(hyper_wiener(path(2))).at("value"), "1");
}

TEST(IndexJson, RoundTrip) {
  for (const auto& v : all_named_indices(g_rn(4, 9), 0.3)) {
    const auto back = index_value_from_json(nlohmann::json::parse(to_json(v).dump()));
    EXPECT_EQ(back.index_name, v.index_name);
    EXPECT_EQ(back.value, v.value);
  }
  const auto big = w_h(path(30), WeightFunction::power(20));
  EXPECT_EQ(index_value_from_json(to_json(big)).value, big.value);
}

TEST(IndexCsv, RoundTrip) {
  auto values = all_named_indices(j_graph(7));
  values.push_back(IndexValue::exact("odd,name \"x\"", Rational(7, 2)));
  const auto text = to_csv(values);
  EXPECT_EQ(text.substr(0, kIndexCsvHeader.size()), kIndexCsvHeader);
  const auto back = index_values_from_csv(text);
  ASSERT_EQ(back.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    EXPECT_EQ(back[i].index_name, values[i].index_name);
    EXPECT_EQ(back[i].value, values[i].value);
  }
}

TEST(ReportJson, RoundTrip) {
  for (const auto& h : {WeightFunction::power(1), WeightFunction::power(-1)}) {
    const auto r = verify_theorem(6, h);
    const auto j = to_json(r);
    EXPECT_EQ(to_json(report_from_json(nlohmann::json::parse(j.dump()))), j);
  }
  const auto small = verify_theorem(4, WeightFunction::power(1));
  EXPECT_EQ(to_json(report_from_json(to_json(small))), to_json(small));
}

TEST(ReportCsv, RoundTrip) {
  const auto r = verify_theorem(6, WeightFunction::power(2));
  const auto text = to_csv(r);
  EXPECT_EQ(text.substr(0, kReportCsvHeader.size()), kReportCsvHeader);
  const auto back = report_from_csv(text);
  EXPECT_EQ(to_csv(back), text);
  EXPECT_EQ(back.min_value->value, r.min_value->value);
  EXPECT_EQ(back.max_value->value, r.max_value->value);
  EXPECT_EQ(back.argmin_forms, r.argmin_forms);
  EXPECT_EQ(back.claims, r.claims);
}

TEST(DominanceCsv, Header) {
  const auto text = to_csv(check_f3_dominance(5, WeightFunction::power(1)));
  EXPECT_EQ(text.substr(0, kDominanceCsvHeader.size()), kDominanceCsvHeader);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 3);
}

TEST(Csv, SplitHonoursQuotes) {
  EXPECT_EQ(split_csv_record("a,\"b,c\",\"d\"\"e\""), (std::vector<std::string>{"a", "b,c", "d\"e"}));
  EXPECT_EQ(split_csv_record("x,,y"), (std::vector<std::string>{"x", "", "y"}));
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
}
