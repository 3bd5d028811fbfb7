#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "median/alphabet.hpp"
#include "median/string_set.hpp"

namespace median {

enum class DatasetKind { protein_like, chaincode_like, perturbed_cluster };

const char* to_string(DatasetKind kind);
DatasetKind parse_dataset_kind(std::string_view name);

struct DatasetSpec {
    DatasetKind kind = DatasetKind::perturbed_cluster;
    std::size_t alphabet_size = 8;
    std::size_t count = 20;
    std::size_t mean_length = 60;
    std::size_t length_jitter = 5;
    double noise_rate = 0.15;  // perturbed_cluster only
    std::uint64_t seed = 1;
};

// Throws InputError on an invalid spec.
void validate(const DatasetSpec& spec);

// Parses "kind=perturbed_cluster,alphabet=8,count=20,mean=60,jitter=5,
// noise=0.15,seed=1"; omitted keys keep their defaults.
DatasetSpec parse_dataset_spec(std::string_view text);
std::string format_dataset_spec(const DatasetSpec& spec);

struct GeneratedDataset {
    Alphabet alphabet;
    StringSet set;
    std::optional<Sequence> center;  // planted string for perturbed_cluster
};

// protein_like: i.i.d. uniform symbols. chaincode_like: a direction walk
// that mostly keeps its heading or turns by one step. perturbed_cluster:
// independent noisy copies of one random center. Lengths are uniform in
// [mean - jitter, mean + jitter] (at least 1).
GeneratedDataset gen_dataset(const DatasetSpec& spec);

// A contour string over the eight Freeman directions '0'..'7'.
struct ChainCodeRecord {
    std::string label;
    std::string code;
};

// Views a dataset over the eight-direction alphabet as chain-code records;
// throws InputError if a member uses any other symbol.
std::vector<ChainCodeRecord> chaincode_records(const GeneratedDataset& data);

}  // namespace median
