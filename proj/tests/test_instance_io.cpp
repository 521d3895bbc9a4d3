#include "bomc/errors.hpp"
#include "bomc/instance_io.hpp"

#include "corpus.hpp"
#include "fixture_files.hpp"

#include <gtest/gtest.h>

namespace bomc {
namespace {

bool same_instance(const Instance& a, const Instance& b) {
  if (a.graph().vertex_count() != b.graph().vertex_count()) return false;
  if (a.graph().edge_count() != b.graph().edge_count()) return false;
  for (EdgeId e = 0; e < a.graph().edge_count(); ++e) {
    if (a.graph().edge(e).u != b.graph().edge(e).u || a.graph().edge(e).v != b.graph().edge(e).v) {
      return false;
    }
  }
  return a.terminals() == b.terminals() && a.lengths() == b.lengths();
}

int parse_error_line(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(InstanceIo, ParsesNamedFixtures) {
  EXPECT_TRUE(same_instance(parse_instance("3 3 2\n0 2\n0 1 1\n1 2 1\n0 2 1\n"),
                            builtin_fixture("FIX-TRI-PATH")));
  EXPECT_TRUE(same_instance(parse_instance("2 1 2\n0 1\n0 1 1\n"), builtin_fixture("FIX-EDGE")));
}

TEST(InstanceIo, EdgeCountMismatch) {
  EXPECT_EQ(parse_error_line("3 2 2\n0 2\n0 1 1\n"), 4);  // first line past the input
  EXPECT_EQ(parse_error_line("2 1 2\n0 1\n0 1 1\n0 1 2\n"), 4);
}

TEST(InstanceIo, CommentsBlankLinesAndEmptyTerminalLine) {
  const Instance a = parse_instance("# K3\n3 3 0\n\n0 1 1 # first\n1 2 1\n\n0 2 1\n");
  EXPECT_TRUE(same_instance(a, builtin_fixture("FIX-TRI-TOUR")));
}

TEST(InstanceIo, WeightsAreExact) {
  const Instance a = parse_instance("2 3 0\n0 1 0.1\n0 1 2/6\n1 0 7\n");
  EXPECT_EQ(a.lengths()[0], Rat(1, 10));
  EXPECT_EQ(a.lengths()[1], Rat(1, 3));
  EXPECT_EQ(a.lengths()[2], 7);
}

TEST(InstanceIo, ErrorsCarryPhysicalLineNumbers) {
  EXPECT_EQ(parse_error_line(""), 1);
  EXPECT_EQ(parse_error_line("3 3\n"), 1);
  EXPECT_EQ(parse_error_line("3 3 1\n0\n"), 1);            // odd |T|
  EXPECT_EQ(parse_error_line("2 1 2\n\n# c\n0 1\n0 1 -1\n"), 5);  // negative weight
  EXPECT_EQ(parse_error_line("2 1 2\n0 1\n0 0 1\n"), 3);   // self-loop
  EXPECT_EQ(parse_error_line("2 1 2\n0 1\n0 5 1\n"), 3);   // vertex range
  EXPECT_EQ(parse_error_line("2 1 2\n0 1\n0 1 x\n"), 3);   // weight
  EXPECT_EQ(parse_error_line("2 1 2\n0 0\n0 1 1\n"), 2);   // duplicate terminal
  EXPECT_EQ(parse_error_line("2 1 2\n0\n0 1 1\n"), 2);     // terminal count
  EXPECT_EQ(parse_error_line("2 1 2\n0 1\n0 1\n"), 3);     // edge arity
  EXPECT_EQ(parse_error_line("a 1 0\n0 1 1\n"), 1);
}

TEST(InstanceIo, DisconnectedGraphIsInvalid) {
  EXPECT_THROW(parse_instance("4 2 0\n0 1 1\n2 3 1\n"), InvalidInput);
}

TEST(InstanceIo, RoundTrip) {
  for (const auto& entry : testing::corpus(30)) {
    const std::string text = format_instance(entry.inst);
    const Instance back = parse_instance(text);
    EXPECT_TRUE(same_instance(entry.inst, back)) << entry.name;
    EXPECT_EQ(format_instance(back), text);
  }
}

TEST(InstanceIo, FixtureFilesMatchBuiltins) {
  const std::pair<const char*, const char*> files[] = {{"fix-edge.txt", "FIX-EDGE"},
                                                       {"fix-tri-tour.txt", "FIX-TRI-TOUR"},
                                                       {"fix-tri-path.txt", "FIX-TRI-PATH"},
                                                       {"fix-c4.txt", "FIX-C4"}};
  for (const auto& [file, name] : files) {
    EXPECT_TRUE(same_instance(testing::load_fixture(file), builtin_fixture(name))) << file;
  }
  EXPECT_EQ(builtin_fixture_names().size(), 4U);
  EXPECT_THROW(builtin_fixture("FIX-NONE"), InvalidInput);
}

TEST(InstanceIo, C4Layout) {
  const Instance c4 = builtin_fixture("FIX-C4");
  ASSERT_EQ(c4.graph().edge_count(), 4);
  for (EdgeId e = 0; e < 4; ++e) {
    EXPECT_EQ(c4.graph().edge(e).u, e);
    EXPECT_EQ(c4.graph().edge(e).v, (e + 1) % 4);
  }
  EXPECT_TRUE(c4.terminals().empty());
}

}  // namespace
}  // namespace bomc
