#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadra/graph.hpp"

namespace quadra {

struct LoadOptions {
    bool weighted = false;
    bool temporal = false;
    // Temporal lists keep duplicate (u,v) records by default; dedupe keeps
    // only the earliest record per undirected pair. Static graphs always
    // collapse parallels.
    bool dedupe = false;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& path, std::size_t line, const std::string& what)
        : std::runtime_error(path + ":" + std::to_string(line) + ": " + what), line_number(line) {}
    std::size_t line_number;
};

struct TemporalRecord {
    NodeId u;
    NodeId v;
    std::int64_t time;
};

// Ordered (u, v, timestamp) records plus the label map shared with graphs
// built from slices of the list. Records keep file order; sorting by time is
// stable so equal timestamps preserve file order.
class TemporalEdgeList {
public:
    TemporalEdgeList() = default;
    TemporalEdgeList(std::vector<TemporalRecord> records, std::vector<std::string> labels)
        : records_(std::move(records)), labels_(std::move(labels)) {}

    const std::vector<TemporalRecord>& records() const { return records_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t size() const { return records_.size(); }
    std::size_t node_count() const { return labels_.size(); }

    TemporalEdgeList sorted_by_time() const;

    // Simple graph over all list nodes from the given record range.
    Graph slice_graph(std::size_t first, std::size_t count) const;

private:
    std::vector<TemporalRecord> records_;
    std::vector<std::string> labels_;
};

// Text edge lists: whitespace-separated tokens, '#'/'%' comment lines,
// 2 tokens plain, 3 weighted (u v w), 3 temporal (u v t), 4 both (u v w t).
// Direction is ignored, self-loops are dropped, weights are normalized by
// the global maximum. Throws ParseError with the offending line number.
Graph load_graph(const std::string& path, const LoadOptions& options = {});

// With options.temporal unset the file is read as a plain edge list and the
// file position becomes the timestamp, so shuffled splits work on any file.
TemporalEdgeList load_temporal(const std::string& path, const LoadOptions& options = {});

}  // namespace quadra
