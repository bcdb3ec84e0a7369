#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>

#include "charnum/cache.hpp"
#include "charnum/request.hpp"

using namespace charnum;

TEST_CASE("spec grammar round-trips") {
    // canonical spellings: format(parse(x)) == x
    for (const char* text : {"N", "A1", "A1^2", "A1^3", "A1^4", "A2", "A3", "A4", "D4", "A1 A2", "A1 A3",
                             "A1^2 A2"}) {
        CHECK(format_sing_spec(parse_sing_spec(text)) == text);
    }
    // accepted variants normalize
    CHECK(format_sing_spec(parse_sing_spec("A1A2")) == "A1 A2");
    CHECK(format_sing_spec(parse_sing_spec("A1^2A2")) == "A1^2 A2");
    CHECK(format_sing_spec(parse_sing_spec("A1^1")) == "A1");
    CHECK(format_sing_spec(parse_sing_spec("  A2  ")) == "A2");
    CHECK(format_sing_spec(parse_sing_spec("")) == "N");
}

TEST_CASE("spec grammar rejects invalid input") {
    CHECK_THROWS_AS(parse_sing_spec("A5"), guard_error);
    CHECK_THROWS_AS(parse_sing_spec("A1^0"), guard_error);
    CHECK_THROWS_AS(parse_sing_spec("D4 A1"), guard_error);
    CHECK_THROWS_AS(parse_sing_spec("A1^3 A2"), guard_error); // codimension 5
    CHECK_THROWS_AS(parse_sing_spec("A1^5"), guard_error);
    CHECK_THROWS_AS(parse_sing_spec("A2 A2"), guard_error);
    CHECK_THROWS_AS(parse_sing_spec("garbage"), guard_error);
}

TEST_CASE("spec grammar survives arbitrary input") {
    // random strings either parse or raise a guard error; nothing else
    std::mt19937 rng(31);
    const char alphabet[] = "A1234D^ ^NXd ";
    std::uniform_int_distribution<int> len(0, 12);
    std::uniform_int_distribution<std::size_t> pick(0, sizeof(alphabet) - 2);
    for (int t = 0; t < 500; ++t) {
        std::string text;
        const int n = len(rng);
        for (int i = 0; i < n; ++i)
            text += alphabet[pick(rng)];
        try {
            SingSpec spec = parse_sing_spec(text);
            // whatever parses must round-trip through its canonical form
            CHECK(parse_sing_spec(format_sing_spec(spec)) == spec);
        } catch (const guard_error&) {
            // fine: rejected
        }
    }
}

TEST_CASE("engine mapping of specs") {
    SECTION("pure nodes fold to a marked node") {
        SingSpec two_nodes = parse_sing_spec("A1^2");
        CHECK(two_nodes.engine_delta() == 1);
        REQUIRE(two_nodes.engine_sing());
        CHECK(*two_nodes.engine_sing() == SingKind::A1);
    }
    SECTION("mixed specs keep their node count") {
        SingSpec mixed = parse_sing_spec("A1^2 A2");
        CHECK(mixed.engine_delta() == 2);
        CHECK(*mixed.engine_sing() == SingKind::A2);
        CHECK(mixed.total_codim() == 4);
    }
    SECTION("smooth") {
        SingSpec smooth = parse_sing_spec("N");
        CHECK(smooth.smooth());
        CHECK_FALSE(smooth.engine_sing());
    }
    SECTION("reference families map one-to-one") {
        for (RefFamily f : all_ref_families()) {
            auto round = spec_to_ref_family(ref_family_spec(f));
            REQUIRE(round);
            CHECK(*round == f);
        }
    }
}

TEST_CASE("query cache keys round-trip") {
    Query q;
    q.family = Family::P;
    q.sing = SingKind::A3;
    q.delta = 1;
    q.d = 5;
    q.r = 20;
    q.s = 1;
    q.n1 = 2;
    q.n2 = 0;
    q.n3 = 1;
    q.theta = 3;
    auto back = Query::from_cache_key(q.cache_key());
    REQUIRE(back);
    CHECK(*back == q);

    CHECK_FALSE(Query::from_cache_key("p:A3:1:5"));
    CHECK_FALSE(Query::from_cache_key("border:A3:1:5:20:1:2:0:1:3"));
    CHECK_FALSE(Query::from_cache_key("p:A3:1:5:20:1:2:0:x:3"));
    CHECK_FALSE(Query::from_cache_key(""));
}

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const char* name) : path(std::filesystem::temp_directory_path() / name) {
        std::filesystem::remove(path);
    }
    ~TempFile() { std::filesystem::remove(path); }
};

} // namespace

TEST_CASE("cache persistence") {
    TempFile file("charnum_cache_test.txt");

    Engine producer;
    const Int value = producer.node_series(1, 4, 15, 0, 0, 0, 0);
    REQUIRE(producer.memo_size() > 0);
    save_cache_file(producer, file.path.string());

    SECTION("a loaded cache reproduces the computation bit for bit") {
        Engine consumer;
        const std::size_t loaded = load_cache_file(consumer, file.path.string());
        CHECK(loaded == producer.memo_size());
        CHECK(consumer.node_series(1, 4, 15, 0, 0, 0, 0) == value);
        // the memoized result came from the file, not recomputation
        CHECK(consumer.memo_size() == loaded);

        Engine cold;
        CHECK(cold.node_series(1, 4, 15, 0, 0, 0, 0) == value);
    }

    SECTION("the temp file does not survive a save") {
        CHECK_FALSE(std::filesystem::exists(file.path.string() + ".tmp"));
    }

    SECTION("version header guards the format") {
        std::ofstream out(file.path, std::ios::trunc);
        out << "charnum-cache 999\nnodes:A1:0:2:1:3:0:0:0:0 3\n";
        out.close();
        Engine consumer;
        CHECK(load_cache_file(consumer, file.path.string()) == 0);
    }

    SECTION("missing files load nothing") {
        Engine consumer;
        CHECK(load_cache_file(consumer, "/nonexistent/charnum.cache") == 0);
    }

    SECTION("corrupt entries are an error") {
        std::ofstream out(file.path, std::ios::trunc);
        out << kCacheHeader << "\nnot-a-query 42\n";
        out.close();
        Engine consumer;
        CHECK_THROWS_AS(load_cache_file(consumer, file.path.string()), error);
    }
}
