#include <gtest/gtest.h>

#include <sstream>

#include "dualsim/detection_log.hpp"

using namespace dualsim;

namespace {

DetectionLog parse(const std::string& body) {
  std::istringstream in(std::string(kDetectionLogHeader) + "\n" + body);
  return DetectionLog::parse(in);
}

}  // namespace

TEST(DetectionLog, ReadsPresentRecord) {
  const auto log = parse("12,FAR,210.0,230.5,24.0,24.0,0.81,1\n12,NEAR,0,0,0,0,0,0\n");
  const auto [far, near] = log.replay_detect(12);
  ASSERT_TRUE(far.box);
  EXPECT_EQ(*far.box, (BoundingBox{210.0, 230.5, 24.0, 24.0}));
  EXPECT_EQ(far.confidence, 0.81);
  EXPECT_FALSE(near.present());
  EXPECT_EQ(near.expert, ExpertId::Near);
}

TEST(DetectionLog, MissingExpertRecordMeansAbsent) {
  const auto log = parse("3,NEAR,200,200,30,30,0.5,1\n");
  EXPECT_FALSE(log.replay_detect(3).first.present());
  EXPECT_TRUE(log.replay_detect(3).second.present());
}

TEST(DetectionLog, HeaderOnlyIsEmpty) { EXPECT_TRUE(parse("").empty()); }

TEST(DetectionLog, OutOfRangeFrame) {
  const auto log = parse("0,FAR,1,1,1,1,1,1\n");
  EXPECT_THROW(log.replay_detect(1), std::out_of_range);
}

TEST(DetectionLog, MalformedLinesReportLineNumber) {
  const auto line_of = [](const std::string& body) {
    try {
      parse(body);
    } catch (const LogFormatError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("0,FAR,1,1,1,1,1,1\n0,MID,1,1,1,1,1,1\n"), 3u);
  EXPECT_EQ(line_of("0,FAR,1,1,1,1\n"), 2u);
  EXPECT_EQ(line_of("0,FAR,1,1,1,1,1,1\n1,FAR,x,1,1,1,1,1\n"), 3u);
  EXPECT_EQ(line_of("0,FAR,1,1,1,1,1,2\n"), 2u);
  EXPECT_EQ(line_of("0,FAR,1,1,1,1,1,1\n0,FAR,1,1,1,1,1,1\n"), 3u);
  EXPECT_EQ(line_of("0,FAR,1,1,0,1,1,1\n"), 2u);
}

TEST(DetectionLog, RejectsWrongHeader) {
  std::istringstream in("frame,expert\n");
  EXPECT_THROW(DetectionLog::parse(in), LogFormatError);
}

TEST(DetectionLogProperty, WriteThenParseIsExact) {
  DetectionLog log;
  Rng rng(5);
  for (int f = 0; f < 200; ++f) {
    Detection far{ExpertId::Far, BoundingBox{rng.uniform(0, 448), rng.uniform(0, 448),
                                             rng.uniform(1, 100), rng.uniform(1, 100)},
                  rng.uniform()};
    Detection near = f % 3 ? Detection::absent(ExpertId::Near)
                           : Detection{ExpertId::Near, BoundingBox{1.0 / 3, 2.0 / 7, 0.1, 1e-5}, 1.0};
    log.append(f, far, near);
  }
  std::stringstream buf;
  log.write(buf);
  const auto back = DetectionLog::parse(buf);
  ASSERT_EQ(back.size(), log.size());
  for (long long f : log.frame_numbers()) EXPECT_EQ(back.replay_detect(f), log.replay_detect(f));
}
