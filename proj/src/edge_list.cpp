#include "quadra/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace quadra {

namespace {

struct RawRecord {
    NodeId u;
    NodeId v;
    double w;
    std::int64_t t;
};

struct ParsedFile {
    std::vector<RawRecord> records;  // self-loops already removed
    std::vector<std::string> labels;
};

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream stream(line);
    std::string token;
    while (stream >> token) tokens.push_back(token);
    return tokens;
}

double parse_weight(const std::string& token, const std::string& path, std::size_t line) {
    double w = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, w);
    if (ec != std::errc{} || ptr != end) throw ParseError(path, line, "bad weight '" + token + "'");
    if (!(w > 0)) throw ParseError(path, line, "weight must be positive, got '" + token + "'");
    return w;
}

std::int64_t parse_time(const std::string& token, const std::string& path, std::size_t line) {
    std::int64_t t = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, t);
    if (ec != std::errc{} || ptr != end) throw ParseError(path, line, "bad timestamp '" + token + "'");
    return t;
}

ParsedFile parse_file(const std::string& path, const LoadOptions& options) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");

    const std::size_t expected_tokens = 2 + (options.weighted ? 1 : 0) + (options.temporal ? 1 : 0);

    ParsedFile out;
    std::unordered_map<std::string, NodeId> ids;
    auto intern = [&](const std::string& name) {
        auto [it, inserted] = ids.emplace(name, static_cast<NodeId>(out.labels.size()));
        if (inserted) out.labels.push_back(name);
        return it->second;
    };

    std::string line;
    std::size_t line_number = 0;
    std::int64_t sequence = 0;
    while (std::getline(file, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#' || line[first] == '%') continue;

        const auto tokens = tokenize(line);
        if (tokens.size() != expected_tokens) {
            throw ParseError(path, line_number,
                             "expected " + std::to_string(expected_tokens) + " fields, got " +
                                 std::to_string(tokens.size()));
        }

        RawRecord rec;
        rec.u = intern(tokens[0]);
        rec.v = intern(tokens[1]);
        rec.w = options.weighted ? parse_weight(tokens[2], path, line_number) : 1.0;
        rec.t = options.temporal ? parse_time(tokens.back(), path, line_number) : sequence++;
        if (rec.u == rec.v) continue;  // self-loop
        out.records.push_back(rec);
    }
    return out;
}

}  // namespace

Graph load_graph(const std::string& path, const LoadOptions& options) {
    LoadOptions opts = options;
    opts.temporal = false;
    ParsedFile parsed = parse_file(path, opts);

    Graph g;
    if (options.weighted) {
        double max_w = 0;
        for (const auto& r : parsed.records) max_w = std::max(max_w, r.w);
        std::vector<WeightedEdge> edges;
        edges.reserve(parsed.records.size());
        for (const auto& r : parsed.records) edges.push_back({r.u, r.v, r.w / max_w});
        g = Graph::from_weighted_edges(parsed.labels.size(), std::move(edges));
    } else {
        std::vector<std::pair<NodeId, NodeId>> edges;
        edges.reserve(parsed.records.size());
        for (const auto& r : parsed.records) edges.emplace_back(r.u, r.v);
        g = Graph::from_edges(parsed.labels.size(), std::move(edges));
    }
    g.set_labels(std::move(parsed.labels));
    return g;
}

TemporalEdgeList load_temporal(const std::string& path, const LoadOptions& options) {
    // Without the temporal flag the file is read as a plain (or weighted)
    // edge list and records take their file position as the timestamp.
    ParsedFile parsed = parse_file(path, options);

    std::vector<TemporalRecord> records;
    records.reserve(parsed.records.size());
    if (options.dedupe) {
        std::set<std::pair<NodeId, NodeId>> seen;
        for (const auto& r : parsed.records) {
            auto key = std::minmax(r.u, r.v);
            if (seen.insert({key.first, key.second}).second) records.push_back({r.u, r.v, r.t});
        }
    } else {
        for (const auto& r : parsed.records) records.push_back({r.u, r.v, r.t});
    }
    return TemporalEdgeList(std::move(records), std::move(parsed.labels));
}

TemporalEdgeList TemporalEdgeList::sorted_by_time() const {
    std::vector<TemporalRecord> sorted = records_;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const TemporalRecord& a, const TemporalRecord& b) { return a.time < b.time; });
    return TemporalEdgeList(std::move(sorted), labels_);
}

Graph TemporalEdgeList::slice_graph(std::size_t first, std::size_t count) const {
    if (first > records_.size() || first + count > records_.size()) {
        throw std::out_of_range("record slice out of range");
    }
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(count);
    for (std::size_t i = first; i < first + count; ++i) {
        edges.emplace_back(records_[i].u, records_[i].v);
    }
    Graph g = Graph::from_edges(labels_.size(), std::move(edges));
    g.set_labels(labels_);
    return g;
}

}  // namespace quadra
