#include <gtest/gtest.h>

#include "loglens/common/errors.hpp"
#include "loglens/gateway/mock_gateway.hpp"
#include "loglens/routing/router.hpp"
#include "scenarios.hpp"

using namespace loglens;
using namespace loglens::routing;
using gateway::MockGateway;
using gateway::MockScript;

namespace {
MockGateway scripted(const std::string& s) { return MockGateway(MockScript::parse(s)); }
}  // namespace

TEST(Router, Strings) {
    EXPECT_EQ(tool_from_string("se"), Tool::Semantic);
    EXPECT_EQ(tool_from_string("SEMANTIC"), Tool::Semantic);
    EXPECT_EQ(tool_from_string("grep"), std::nullopt);
    EXPECT_EQ(tier_from_string("Partial"), Tier::Partial);
    EXPECT_EQ(to_string(Tier::General), "general");
}

TEST(Router, DedupeKeepsFirstSpelling) {
    EXPECT_EQ(dedupe_case_insensitive({"Error", "ERROR", "", "  ", "warn", "error"}),
              (std::vector<std::string>{"Error", "warn"}));
}

TEST(Router, Level1RetriesOnceThenThrows) {
    auto gw = scripted("default nope\n");
    EXPECT_THROW(route_level1("q", gw), RouteParseError);
    EXPECT_EQ(gw.chat_calls(), 2u);
}

TEST(Router, Level2KeywordWithoutListIsMissingParams) {
    auto gw = scripted("default {\"choice\":\"keyword\"}\n");
    EXPECT_THROW(route_level2("q", gw), MissingParamsError);
}

TEST(Router, BareStringCountsAsOneElementList) {
    auto gw = scripted("default {\"choice\":\"keyword\",\"keywords\":\"timeout\"}\n");
    EXPECT_EQ(route_level2("q", gw).keywords, (std::vector<std::string>{"timeout"}));
}

TEST(Router, GeneralTierSkipsLevel2) {
    auto gw = scripted("when 'general' stage\nreply {\"choice\":\"general\"}\ndefault x\n");
    EXPECT_EQ(route_query("hi", gw), RouteDecision::general());
    EXPECT_EQ(gw.chat_calls(), 1u);
}

TEST(Router, GatewayFailuresAreNotFallbacks) {
    auto gw = scripted("when 'general' stage\nfail auth\n");
    EXPECT_THROW(route_query("q", gw), GatewayError);
}

TEST(Router, RoutingMatrix) {
    const auto cases = loglens::testing::routing_matrix();
    ASSERT_EQ(cases.size(), 30u);
    for (const auto& c : cases) {
        auto gw = scripted(c.script);
        const auto got = route_query(c.query, gw);
        EXPECT_EQ(got, c.expected) << c.name;
        EXPECT_TRUE(got.well_formed()) << c.name;
    }
}

TEST(Router, DecisionsAreWellFormed) {
    EXPECT_TRUE(RouteDecision::keyword({"a"}).well_formed());
    EXPECT_FALSE(RouteDecision::keyword({}).well_formed());
    RouteDecision bad = RouteDecision::all();
    bad.tool = Tool::Keyword;
    EXPECT_FALSE(bad.well_formed());
}
