#include "rrt/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rrt {

std::string format_double(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw std::runtime_error("format_double failed");
    return {buf, end};
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i != 0) os << ',';
        os << csv_field(fields[i]);
    }
    os << '\n';
}

void write_functional_csv(std::ostream& os, std::span<const FunctionalRecord> records) {
    write_csv_row(os, {"replication", "n", "tpl", "hpl", "wiener", "comparisons"});
    for (std::size_t r = 0; r < records.size(); ++r) {
        os << r << ',' << to_csv_row(records[r]) << '\n';
    }
}

void write_limit_csv(std::ostream& os, std::span<const SeriesValues> samples) {
    write_csv_row(os, {"replication", "y", "z", "w", "y_plus_z"});
    for (std::size_t r = 0; r < samples.size(); ++r) {
        const auto& s = samples[r];
        write_csv_row(os, {std::to_string(r), format_double(s.y), format_double(s.z),
                           format_double(s.w), format_double(s.y + s.z)});
    }
}

void write_exact_dist_csv(std::ostream& os, const ExactDist& dist) {
    write_csv_row(os, {"value", "numerator", "denominator"});
    for (auto [value, count] : dist.counts) {
        Rational p = dist.weight(value);
        write_csv_row(os, {std::to_string(value), to_string(p.num()), to_string(p.den())});
    }
}

void write_joint_table_csv(std::ostream& os, const JointTable& table) {
    write_csv_row(os, {"tpl", "hpl", "count"});
    for (const auto& [key, count] : table) {
        write_csv_row(os, {std::to_string(key.first), std::to_string(key.second), std::to_string(count)});
    }
}

nlohmann::json tree_to_json(const HarrisTree& x) {
    auto ws = x.words();
    std::sort(ws.begin(), ws.end());
    auto j = nlohmann::json::array();
    for (const auto& w : ws) j.push_back(to_string(w));
    return j;
}

HarrisTree tree_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("tree JSON must be an array of word strings");
    }
    std::vector<Word> words;
    for (const auto& item : j) {
        if (item.is_string()) {
            words.push_back(parse_word(item.get<std::string>()));
        } else if (item.is_array()) {
            words.emplace_back(item.get<std::vector<Letter>>());
        } else {
            throw std::invalid_argument("tree JSON entries must be strings or integer arrays");
        }
    }
    return HarrisTree::from_words(words);
}

nlohmann::json encoding_to_json(std::span<const std::uint32_t> e) {
    return nlohmann::json(std::vector<std::uint32_t>(e.begin(), e.end()));
}

Encoding encoding_from_json(const nlohmann::json& j) {
    auto e = j.get<Encoding>();
    if (!is_valid_encoding(e)) {
        throw std::invalid_argument("encoding entries must satisfy 1 <= j_k <= k");
    }
    return e;
}

nlohmann::json simplex_to_json(const SimplexVec& s) {
    return {{"masses", s.masses}, {"residual", s.residual}};
}

nlohmann::json trace_to_json(const RtTrace& trace) {
    nlohmann::json j = nlohmann::json::object();
    const HarrisTree& x = trace.tree();
    for (HarrisTree::NodeId id = 0; id < x.size(); ++id) {
        const auto& r = trace.record(id);
        j[to_string(x.word(id))] = {{"tau", r.tau}, {"kappa", r.kappa}, {"label", r.label}};
    }
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace rrt
