#include "median/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "median/errors.hpp"

namespace median {

std::string format_number(double value) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) {
        throw StructuralError("cannot format number");
    }
    return std::string(buf.data(), ptr);
}

namespace {

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto tab = line.find('\t', start);
        out.push_back(line.substr(start, tab - start));
        if (tab == std::string::npos) break;
        start = tab + 1;
    }
    return out;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    return out;
}

}  // namespace

LoadedStrings read_strings(std::istream& in) {
    constexpr std::string_view kHeader = "#alphabet:";
    std::optional<Alphabet> alphabet;
    StringSet set;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (!alphabet) {
            if (line.rfind(kHeader, 0) != 0) {
                throw InputError(at_line(lineno) + "expected '#alphabet: <chars>' header");
            }
            std::string chars = line.substr(kHeader.size());
            if (!chars.empty() && chars.front() == ' ') chars.erase(0, 1);
            try {
                alphabet.emplace(chars);
            } catch (const InputError& e) {
                throw InputError(at_line(lineno) + e.what());
            }
            continue;
        }
        if (line.empty() || line.front() == '#') continue;
        std::string label;
        std::string body = line;
        if (const auto tab = line.find('\t'); tab != std::string::npos) {
            label = line.substr(0, tab);
            body = line.substr(tab + 1);
        }
        try {
            set.add(alphabet->encode(body), std::move(label));
        } catch (const InputError& e) {
            throw InputError(at_line(lineno) + e.what());
        }
    }
    if (!alphabet) throw InputError("string file has no '#alphabet:' header");
    return {*alphabet, std::move(set)};
}

LoadedStrings load_strings(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_strings(in);
}

void write_strings(std::ostream& out, const Alphabet& alphabet, const StringSet& set) {
    out << "#alphabet: " << alphabet.chars() << '\n';
    for (std::size_t i = 0; i < set.size(); ++i) {
        const bool labelled = i < set.labels.size() && !set.labels[i].empty();
        if (labelled) out << set.labels[i] << '\t';
        out << alphabet.decode(set[i]) << '\n';
    }
}

void save_strings(const std::filesystem::path& path, const Alphabet& alphabet,
                  const StringSet& set) {
    auto out = open_out(path);
    write_strings(out, alphabet, set);
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::pair<Alphabet, CostModel> read_cost_matrix(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            strip_cr(line);
            if (!line.empty()) return true;
        }
        return false;
    };

    if (!next_line()) throw InputError("cost matrix file is empty");
    auto header = split_tabs(line);
    if (!header.empty() && header.front().empty()) header.erase(header.begin());
    if (header.size() < 2 || header.back() != "EPS") {
        throw InputError(at_line(lineno) + "header must list the symbols followed by EPS");
    }
    std::string chars;
    for (std::size_t k = 0; k + 1 < header.size(); ++k) {
        if (header[k].size() != 1) {
            throw InputError(at_line(lineno) + "symbol '" + header[k] + "' is not a single character");
        }
        chars += header[k];
    }
    Alphabet alphabet;
    try {
        alphabet = Alphabet(chars);
    } catch (const InputError& e) {
        throw InputError(at_line(lineno) + e.what());
    }

    const std::size_t dim = alphabet.size() + 1;
    std::vector<double> costs(dim * dim, 0.0);
    for (std::size_t row = 0; row < dim; ++row) {
        if (!next_line()) throw InputError("cost matrix has " + std::to_string(row) + " rows, expected " + std::to_string(dim));
        auto fields = split_tabs(line);
        if (fields.size() == dim + 1) {
            const std::string expected = row + 1 == dim ? "EPS" : std::string(1, chars[row]);
            if (fields.front() != expected) {
                throw InputError(at_line(lineno) + "row label '" + fields.front() + "', expected '" + expected + "'");
            }
            fields.erase(fields.begin());
        }
        if (fields.size() != dim) {
            throw InputError(at_line(lineno) + "expected " + std::to_string(dim) + " cost fields, got " + std::to_string(fields.size()));
        }
        for (std::size_t col = 0; col < dim; ++col) {
            const std::string& f = fields[col];
            if (f == "-") {
                if (row != col) throw InputError(at_line(lineno) + "'-' is only allowed on the diagonal");
                continue;
            }
            if (row == col && row + 1 == dim) continue;  // eps -> eps is ignored
            double value = 0.0;
            auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
            if (ec != std::errc{} || ptr != f.data() + f.size()) {
                throw InputError(at_line(lineno) + "bad cost '" + f + "'");
            }
            costs[row * dim + col] = value;
        }
    }
    if (next_line()) throw InputError(at_line(lineno) + "unexpected trailing content");
    return {alphabet, CostModel(alphabet.size(), std::move(costs))};
}

std::pair<Alphabet, CostModel> load_cost_matrix(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_cost_matrix(in);
}

CostModel load_cost_matrix(const std::filesystem::path& path, const Alphabet& alphabet) {
    auto [file_alphabet, model] = load_cost_matrix(path);
    if (file_alphabet.size() != alphabet.size()) {
        throw InputError("cost matrix alphabet '" + file_alphabet.chars() +
                         "' does not match '" + alphabet.chars() + "'");
    }
    for (char c : file_alphabet.chars()) {
        if (!alphabet.contains(c)) {
            throw InputError(std::string("cost matrix symbol '") + c + "' is not in the alphabet");
        }
    }
    const std::size_t dim = alphabet.size() + 1;
    auto remap = [&](std::size_t idx) -> std::size_t {
        return idx == alphabet.size() ? idx : file_alphabet.code(alphabet.chars()[idx]);
    };
    std::vector<double> costs(dim * dim);
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            costs[a * dim + b] = model.cost(static_cast<Symbol>(remap(a)), static_cast<Symbol>(remap(b)));
        }
    }
    return CostModel(alphabet.size(), std::move(costs));
}

void write_cost_matrix(std::ostream& out, const Alphabet& alphabet, const CostModel& model) {
    if (alphabet.size() != model.alphabet_size()) {
        throw StructuralError("alphabet and cost model sizes differ");
    }
    const std::size_t dim = model.dimension();
    for (char c : alphabet.chars()) out << c << '\t';
    out << "EPS\n";
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            if (b > 0) out << '\t';
            const double v = model.cost(static_cast<Symbol>(a), static_cast<Symbol>(b));
            if (a == b && (a + 1 == dim || v == 0.0)) out << '-';
            else out << format_number(v);
        }
        out << '\n';
    }
}

void save_cost_matrix(const std::filesystem::path& path, const Alphabet& alphabet,
                      const CostModel& model) {
    auto out = open_out(path);
    write_cost_matrix(out, alphabet, model);
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::pair<Alphabet, CostModel> builtin_table1() {
    // Rows/columns: 0 1 2 4 eps.
    std::vector<double> costs = {
        0, 1, 2, 4, 2,
        1, 0, 1, 3, 2,
        2, 1, 0, 2, 2,
        4, 3, 2, 0, 2,
        2, 2, 2, 2, 0,
    };
    return {Alphabet("0124"), CostModel(4, std::move(costs))};
}

}  // namespace median
