#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "prefrank/graph.hpp"
#include "prefrank/ranking.hpp"

namespace prefrank {

// Edge-list text format: first line is n, each further line one "i j" edge,
// 1-indexed. The reader rejects self-loops, duplicates and out-of-range ids.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list(const Graph& g, const std::string& path);
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

// Preference file: "TASK n [levels]" on the first line, then n whitespace
// separated values.
void write_preference(const PreferenceVector& pref, std::ostream& out);
void write_preference(const PreferenceVector& pref, const std::string& path);
PreferenceVector read_preference(std::istream& in);
PreferenceVector read_preference_file(const std::string& path);

// Sparse "label index:value" feature lines (the usual libsvm layout).
// Returns labels and dense vectors padded to the maximum seen index.
struct FeatureData {
    std::vector<double> labels;
    std::vector<std::vector<double>> features;
};
FeatureData read_libsvm(std::istream& in);
FeatureData read_libsvm_file(const std::string& path);

void write_ranking(const Ranking& r, std::ostream& out);
Ranking read_ranking(std::istream& in);

// (k, y_k) sample rows for replaying a trial
void write_sample_csv(const PreferenceSample& s, std::ostream& out);
PreferenceSample read_sample_csv(std::istream& in);

std::string task_name(Task t);
Task task_from_name(const std::string& name);

}  // namespace prefrank
