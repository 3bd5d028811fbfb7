#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "median/datasets.hpp"
#include "median/errors.hpp"
#include "median/io.hpp"
#include "median/refine.hpp"

using namespace median;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("median_ds_" + std::to_string(std::hash<std::string>{}(doctest::getContextOptions()->binary_name.c_str())) +
                "_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

std::string error_of(const std::string& text, bool matrix) {
    std::istringstream in(text);
    try {
        if (matrix) read_cost_matrix(in);
        else read_strings(in);
    } catch (const InputError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("dataset spec parsing and validation") {
    const auto spec = parse_dataset_spec("kind=protein_like, alphabet=23,count=720,mean=500,jitter=50,seed=7");
    CHECK(spec.kind == DatasetKind::protein_like);
    CHECK(spec.alphabet_size == 23);
    CHECK(spec.count == 720);
    CHECK(spec.mean_length == 500);
    CHECK(spec.length_jitter == 50);
    CHECK(spec.seed == 7);
    CHECK(parse_dataset_spec(format_dataset_spec(spec)).seed == 7);
    CHECK(format_dataset_spec(parse_dataset_spec(format_dataset_spec(spec))) == format_dataset_spec(spec));

    CHECK_THROWS_AS(parse_dataset_spec("kind=letters"), InputError);
    CHECK_THROWS_AS(parse_dataset_spec("count=0"), InputError);
    CHECK_THROWS_AS(parse_dataset_spec("mean=0"), InputError);
    CHECK_THROWS_AS(parse_dataset_spec("alphabet=1"), InputError);
    CHECK_THROWS_AS(parse_dataset_spec("noise=1.5"), InputError);
    CHECK_THROWS_AS(parse_dataset_spec("count=abc"), InputError);
    CHECK_THROWS_AS(parse_dataset_spec("colour=red"), InputError);
}

TEST_CASE("gen_dataset examples") {
    SUBCASE("protein corpus scale") {
        const auto d = gen_dataset(parse_dataset_spec("kind=protein_like,alphabet=23,count=720,mean=500,jitter=50,seed=3"));
        CHECK(d.set.size() == 720);
        CHECK(d.alphabet.size() == 23);
        double total = 0;
        for (const auto& s : d.set.members) {
            CHECK(s.size() >= 450);
            CHECK(s.size() <= 550);
            total += static_cast<double>(s.size());
        }
        const double mean = total / 720.0;
        CHECK(mean >= 450.0);
        CHECK(mean <= 550.0);
        CHECK_FALSE(d.center.has_value());
    }
    SUBCASE("singleton sets") {
        for (const char* kind : {"protein_like", "chaincode_like", "perturbed_cluster"}) {
            const auto d = gen_dataset(parse_dataset_spec(std::string("count=1,kind=") + kind));
            CHECK(d.set.size() == 1);
        }
    }
    SUBCASE("zero noise copies the center") {
        const auto d = gen_dataset(parse_dataset_spec("kind=perturbed_cluster,count=12,noise=0,seed=5"));
        REQUIRE(d.center.has_value());
        for (const auto& s : d.set.members) CHECK(s == *d.center);
        const CostModel unit = CostModel::unit(d.alphabet.size());
        CHECK(sum_distances(*d.center, d.set, unit) == 0.0);
    }
    SUBCASE("symbols stay inside the alphabet") {
        for (const char* kind : {"protein_like", "chaincode_like", "perturbed_cluster"}) {
            const auto d = gen_dataset(parse_dataset_spec(std::string("count=30,alphabet=5,kind=") + kind));
            for (const auto& s : d.set.members) {
                CHECK_FALSE(s.empty());
                for (Symbol c : s) CHECK(c < 5);
            }
        }
    }
}

TEST_CASE("chain-code walks are smooth") {
    const auto d = gen_dataset(parse_dataset_spec("kind=chaincode_like,alphabet=8,count=50,mean=80,seed=9"));
    std::size_t steps = 0, small = 0;
    for (const auto& s : d.set.members) {
        for (std::size_t i = 1; i < s.size(); ++i) {
            const int turn = (s[i] - s[i - 1] + 8) % 8;
            if (turn == 0 || turn == 1 || turn == 7) ++small;
            ++steps;
        }
    }
    // Heading kept or turned by one with probability 0.9.
    CHECK(static_cast<double>(small) / static_cast<double>(steps) > 0.85);

    const auto records = chaincode_records(d);
    REQUIRE(records.size() == 50);
    for (const auto& r : records) {
        CHECK(r.label == "0");
        CHECK(r.code.find_first_not_of("01234567") == std::string::npos);
    }
    const auto wide = gen_dataset(parse_dataset_spec("kind=chaincode_like,alphabet=12,count=40,seed=2"));
    CHECK_THROWS_AS(chaincode_records(wide), InputError);
}

TEST_CASE("gen_dataset is deterministic") {
    for (const char* kind : {"protein_like", "chaincode_like", "perturbed_cluster"}) {
        const auto spec = parse_dataset_spec(std::string("count=25,seed=11,kind=") + kind);
        const auto a = gen_dataset(spec);
        const auto b = gen_dataset(spec);
        CHECK(a.set.members == b.set.members);
        CHECK(a.set.labels == b.set.labels);
        CHECK(a.center == b.center);
        std::ostringstream sa, sb;
        write_strings(sa, a.alphabet, a.set);
        write_strings(sb, b.alphabet, b.set);
        CHECK(sa.str() == sb.str());

        auto other = spec;
        other.seed = 12;
        CHECK(gen_dataset(other).set.members != a.set.members);
    }
}

TEST_CASE("planted center is a near-median witness") {
    std::size_t wins = 0;
    const std::size_t seeds = 40;
    for (std::size_t seed = 1; seed <= seeds; ++seed) {
        auto spec = parse_dataset_spec("kind=perturbed_cluster,alphabet=8,count=20,mean=40,noise=0.1");
        spec.seed = seed;
        const auto d = gen_dataset(spec);
        const CostModel unit = CostModel::unit(d.alphabet.size());
        const double center = sum_distances(*d.center, d.set, unit);
        const double set_med = sum_distances(set_median(d.set, unit), d.set, unit);
        if (center <= set_med) ++wins;
    }
    CHECK(static_cast<double>(wins) >= 0.9 * seeds);
}

TEST_CASE("builtin_table1 entries") {
    const auto [a, m] = builtin_table1();
    CHECK(a.chars() == "0124");
    const auto c = [&](char x, char y) { return m.cost(a.code(x), a.code(y)); };
    const Symbol eps = a.epsilon();
    CHECK(c('2', '1') == 1.0);
    CHECK(c('1', '4') == 3.0);
    CHECK(c('0', '4') == 4.0);
    CHECK(c('2', '0') == 2.0);
    CHECK(m.cost(a.code('0'), eps) == 2.0);
    for (Symbol s = 0; s < 4; ++s) {
        CHECK(m.cost(eps, s) == 2.0);
        CHECK(m.cost(s, eps) == 2.0);
    }
    CHECK(m.metric_validated());
}

TEST_CASE("string file loading") {
    std::istringstream in("#alphabet: abc\n# comment\nabc\n\nx\tcab\n");
    const auto loaded = read_strings(in);
    CHECK(loaded.alphabet.chars() == "abc");
    REQUIRE(loaded.set.size() == 2);
    CHECK(loaded.alphabet.decode(loaded.set[1]) == "cab");
    CHECK(loaded.set.labels[1] == "x");

    CHECK(error_of("abc\n", false).find("line 1") != std::string::npos);
    CHECK(error_of("#alphabet: ab\nab\nabz\n", false).find("line 3") != std::string::npos);
    CHECK_FALSE(error_of("", false).empty());
    CHECK_THROWS_AS(load_strings("/nonexistent/strings.txt"), IoError);
}

TEST_CASE("cost matrix loading") {
    const std::string good =
        "a\tb\tEPS\n"
        "a\t-\t1\t2\n"
        "b\t1\t-\t2\n"
        "EPS\t2\t2\t-\n";
    std::istringstream in(good);
    const auto [a, m] = read_cost_matrix(in);
    CHECK(a.chars() == "ab");
    CHECK(m.cost(0, 1) == 1.0);
    CHECK(m.cost(a.epsilon(), 0) == 2.0);

    CHECK(error_of("a\tb\n", true).find("line 1") != std::string::npos);
    CHECK(error_of("a\tb\tEPS\n0\t1\t2\n1\t0\n", true).find("line 3") != std::string::npos);
    CHECK(error_of("a\tb\tEPS\n0\t1\t2\n1\t0\t2\n2\tzz\t0\n", true).find("line 4") != std::string::npos);
    CHECK(error_of("a\tb\tEPS\n0\t-\t2\n1\t0\t2\n2\t2\t0\n", true).find("line 2") != std::string::npos);
    CHECK(error_of("a\tb\tEPS\nb\t0\t1\t2\n", true).find("line 2") != std::string::npos);
    // Negative costs violate the model invariants.
    CHECK_FALSE(error_of("a\tb\tEPS\n0\t-1\t2\n1\t0\t2\n2\t2\t0\n", true).empty());

    TempDir dir;
    const auto path = dir.path / "costs.tsv";
    {
        std::ofstream out(path);
        out << "b\ta\tEPS\nb\t0\t3\t1\na\t3\t0\t2\nEPS\t1\t2\t0\n";
    }
    const CostModel reordered = load_cost_matrix(path, Alphabet("ab"));
    CHECK(reordered.cost(0, 1) == 3.0);
    CHECK(reordered.cost(0, 2) == 2.0);  // a -> eps
    CHECK(reordered.cost(1, 2) == 1.0);  // b -> eps
    CHECK_THROWS_AS(load_cost_matrix(path, Alphabet("ac")), InputError);
    CHECK_THROWS_AS(load_cost_matrix(path, Alphabet("abc")), InputError);
}

TEST_CASE("load then save reproduces the bytes") {
    TempDir dir;
    SUBCASE("cost matrix") {
        const auto [a, m] = builtin_table1();
        const auto first = dir.path / "t1.tsv";
        const auto second = dir.path / "t1b.tsv";
        save_cost_matrix(first, a, m);
        const auto [a2, m2] = load_cost_matrix(first);
        save_cost_matrix(second, a2, m2);
        CHECK(slurp(first) == slurp(second));
        CHECK(m2.raw() == m.raw());

        const CostModel frac = CostModel::unit(3).scaled(0.1);
        save_cost_matrix(first, Alphabet("xyz"), frac);
        const auto [a3, m3] = load_cost_matrix(first);
        CHECK(m3.raw() == frac.raw());
        save_cost_matrix(second, a3, m3);
        CHECK(slurp(first) == slurp(second));
    }
    SUBCASE("string set") {
        const auto d = gen_dataset(parse_dataset_spec("kind=chaincode_like,count=10,seed=4"));
        const auto first = dir.path / "s.txt";
        const auto second = dir.path / "s2.txt";
        save_strings(first, d.alphabet, d.set);
        const auto loaded = load_strings(first);
        CHECK(loaded.set.members == d.set.members);
        save_strings(second, loaded.alphabet, loaded.set);
        CHECK(slurp(first) == slurp(second));
    }
}
