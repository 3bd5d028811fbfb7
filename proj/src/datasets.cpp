#include "median/datasets.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "median/errors.hpp"
#include "median/io.hpp"
#include "median/rng.hpp"

namespace median {

const char* to_string(DatasetKind kind) {
    switch (kind) {
        case DatasetKind::protein_like: return "protein_like";
        case DatasetKind::chaincode_like: return "chaincode_like";
        case DatasetKind::perturbed_cluster: return "perturbed_cluster";
    }
    return "?";
}

DatasetKind parse_dataset_kind(std::string_view name) {
    if (name == "protein_like") return DatasetKind::protein_like;
    if (name == "chaincode_like") return DatasetKind::chaincode_like;
    if (name == "perturbed_cluster") return DatasetKind::perturbed_cluster;
    throw InputError("unknown dataset kind '" + std::string(name) + "'");
}

void validate(const DatasetSpec& spec) {
    if (spec.count < 1) throw InputError("dataset count must be >= 1");
    if (spec.mean_length < 1) throw InputError("dataset mean length must be >= 1");
    if (spec.alphabet_size < 2) throw InputError("dataset alphabet size must be >= 2");
    if (!(spec.noise_rate >= 0.0 && spec.noise_rate <= 1.0)) {
        throw InputError("noise rate must be in [0, 1]");
    }
}

namespace {

template <typename T>
T parse_value(std::string_view key, std::string_view text) {
    T value{};
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw InputError("bad value '" + std::string(text) + "' for '" + std::string(key) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

DatasetSpec parse_dataset_spec(std::string_view text) {
    DatasetSpec spec;
    while (!text.empty()) {
        const auto comma = text.find(',');
        std::string_view item = trim(text.substr(0, comma));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw InputError("dataset spec item '" + std::string(item) + "' lacks '='");
        }
        const auto key = trim(item.substr(0, eq));
        const auto value = trim(item.substr(eq + 1));
        if (key == "kind") spec.kind = parse_dataset_kind(value);
        else if (key == "alphabet") spec.alphabet_size = parse_value<std::size_t>(key, value);
        else if (key == "count") spec.count = parse_value<std::size_t>(key, value);
        else if (key == "mean") spec.mean_length = parse_value<std::size_t>(key, value);
        else if (key == "jitter") spec.length_jitter = parse_value<std::size_t>(key, value);
        else if (key == "noise") spec.noise_rate = parse_value<double>(key, value);
        else if (key == "seed") spec.seed = parse_value<std::uint64_t>(key, value);
        else throw InputError("unknown dataset spec key '" + std::string(key) + "'");
    }
    validate(spec);
    return spec;
}

std::string format_dataset_spec(const DatasetSpec& spec) {
    std::ostringstream out;
    out << "kind=" << to_string(spec.kind) << ",alphabet=" << spec.alphabet_size
        << ",count=" << spec.count << ",mean=" << spec.mean_length
        << ",jitter=" << spec.length_jitter << ",noise=" << format_number(spec.noise_rate)
        << ",seed=" << spec.seed;
    return out.str();
}

namespace {

constexpr std::string_view kAminoAcids = "ACDEFGHIKLMNPQRSTVWYBZX";

Alphabet alphabet_for(const DatasetSpec& spec) {
    if (spec.kind == DatasetKind::protein_like && spec.alphabet_size <= kAminoAcids.size()) {
        return Alphabet(kAminoAcids.substr(0, spec.alphabet_size));
    }
    return Alphabet::first_n(spec.alphabet_size);
}

std::size_t draw_length(const DatasetSpec& spec, Rng& rng) {
    const std::size_t lo = spec.mean_length > spec.length_jitter
                               ? spec.mean_length - spec.length_jitter
                               : 1;
    return static_cast<std::size_t>(rng.uniform_int(lo, spec.mean_length + spec.length_jitter));
}

Symbol draw_symbol(std::size_t sigma, Rng& rng) {
    return static_cast<Symbol>(rng.uniform_int(0, sigma - 1));
}

Sequence uniform_string(std::size_t length, std::size_t sigma, Rng& rng) {
    Sequence s(length);
    for (auto& c : s) c = draw_symbol(sigma, rng);
    return s;
}

// Heading changes: keep 0.5, turn by one 0.2 each way, by two 0.05 each way.
Sequence direction_walk(std::size_t length, std::size_t sigma, Rng& rng) {
    Sequence s(length);
    std::size_t dir = draw_symbol(sigma, rng);
    for (auto& c : s) {
        c = static_cast<Symbol>(dir);
        const double u = rng.uniform01();
        std::size_t step = 0;
        if (u < 0.5) step = 0;
        else if (u < 0.7) step = 1;
        else if (u < 0.9) step = sigma - 1;
        else if (u < 0.95) step = 2;
        else step = sigma - 2;
        dir = (dir + step) % sigma;
    }
    return s;
}

Sequence perturb(const Sequence& center, std::size_t sigma, double noise, Rng& rng) {
    Sequence out;
    out.reserve(center.size() + center.size() / 4 + 1);
    auto maybe_insert = [&] {
        if (rng.bernoulli(noise)) out.push_back(draw_symbol(sigma, rng));
    };
    maybe_insert();
    for (Symbol c : center) {
        if (rng.bernoulli(noise)) {
            if (rng.bernoulli(0.5)) {
                const auto shift = rng.uniform_int(1, sigma - 1);
                out.push_back(static_cast<Symbol>((c + shift) % sigma));
            }
            // otherwise deleted
        } else {
            out.push_back(c);
        }
        maybe_insert();
    }
    return out;
}

}  // namespace

GeneratedDataset gen_dataset(const DatasetSpec& spec) {
    validate(spec);
    GeneratedDataset out{alphabet_for(spec), {}, std::nullopt};
    Rng rng(spec.seed);
    const std::size_t sigma = spec.alphabet_size;

    switch (spec.kind) {
        case DatasetKind::protein_like:
            for (std::size_t i = 0; i < spec.count; ++i) {
                out.set.add(uniform_string(draw_length(spec, rng), sigma, rng));
            }
            break;
        case DatasetKind::chaincode_like:
            for (std::size_t i = 0; i < spec.count; ++i) {
                out.set.add(direction_walk(draw_length(spec, rng), sigma, rng), "0");
            }
            break;
        case DatasetKind::perturbed_cluster: {
            Sequence center = uniform_string(draw_length(spec, rng), sigma, rng);
            for (std::size_t i = 0; i < spec.count; ++i) {
                out.set.add(perturb(center, sigma, spec.noise_rate, rng));
            }
            out.center = std::move(center);
            break;
        }
    }
    return out;
}

std::vector<ChainCodeRecord> chaincode_records(const GeneratedDataset& data) {
    std::vector<ChainCodeRecord> out;
    out.reserve(data.set.size());
    for (std::size_t i = 0; i < data.set.size(); ++i) {
        std::string code = data.alphabet.decode(data.set[i]);
        if (code.find_first_not_of("01234567") != std::string::npos) {
            throw InputError("member " + std::to_string(i) + " is not a chain code");
        }
        out.push_back({i < data.set.labels.size() ? data.set.labels[i] : std::string{}, std::move(code)});
    }
    return out;
}

}  // namespace median
