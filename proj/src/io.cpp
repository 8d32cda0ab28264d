#include "prefrank/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace prefrank {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return in;
}

}  // namespace

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.n() << '\n';
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (g.edge(i, j)) out << (i + 1) << ' ' << (j + 1) << '\n';
}

void write_edge_list(const Graph& g, const std::string& path) {
    auto out = open_out(path);
    write_edge_list(g, out);
}

Graph read_edge_list(std::istream& in) {
    int n;
    if (!(in >> n) || n < 1) throw std::runtime_error("edge list: bad node count");
    Graph g(n);
    std::set<std::pair<int, int>> seen;
    int i, j;
    while (in >> i >> j) {
        if (i < 1 || j < 1 || i > n || j > n) throw std::runtime_error("edge list: node id out of range");
        if (i == j) throw std::runtime_error("edge list: self-loop");
        const std::pair<int, int> key = std::minmax(i, j);
        if (!seen.insert(key).second) throw std::runtime_error("edge list: duplicate edge");
        g.add_edge(i - 1, j - 1);
    }
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    auto in = open_in(path);
    return read_edge_list(in);
}

std::string task_name(Task t) {
    switch (t) {
        case Task::BR: return "BR";
        case Task::OR: return "OR";
        case Task::FR: return "FR";
    }
    throw std::logic_error("task_name: bad task");
}

Task task_from_name(const std::string& name) {
    if (name == "BR" || name == "br") return Task::BR;
    if (name == "OR" || name == "or") return Task::OR;
    if (name == "FR" || name == "fr") return Task::FR;
    throw std::invalid_argument("unknown task: " + name);
}

void write_preference(const PreferenceVector& pref, std::ostream& out) {
    out << task_name(pref.task) << ' ' << pref.n();
    if (pref.task == Task::OR) out << ' ' << pref.levels;
    out << '\n';
    for (int i = 0; i < pref.n(); ++i) {
        out << fmt(pref.values[i]);
        out << (i + 1 < pref.n() ? ' ' : '\n');
    }
}

void write_preference(const PreferenceVector& pref, const std::string& path) {
    auto out = open_out(path);
    write_preference(pref, out);
}

PreferenceVector read_preference(std::istream& in) {
    std::string task;
    int n;
    if (!(in >> task >> n) || n < 1) throw std::runtime_error("preference file: bad header");
    PreferenceVector pref;
    pref.task = task_from_name(task);
    if (pref.task == Task::OR) {
        if (!(in >> pref.levels) || pref.levels < 2)
            throw std::runtime_error("preference file: bad OR level count");
    }
    pref.values.resize(n);
    for (int i = 0; i < n; ++i)
        if (!(in >> pref.values[i])) throw std::runtime_error("preference file: too few values");
    return pref;
}

PreferenceVector read_preference_file(const std::string& path) {
    auto in = open_in(path);
    return read_preference(in);
}

FeatureData read_libsvm(std::istream& in) {
    FeatureData data;
    std::vector<std::vector<std::pair<int, double>>> sparse;
    size_t max_index = 0;
    std::string line;
    while (std::getline(in, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        double label;
        if (!(ls >> label)) continue;  // blank line
        std::vector<std::pair<int, double>> row;
        std::string tok;
        while (ls >> tok) {
            const size_t colon = tok.find(':');
            if (colon == std::string::npos) throw std::runtime_error("libsvm: expected index:value, got " + tok);
            const int idx = std::stoi(tok.substr(0, colon));
            const double val = std::stod(tok.substr(colon + 1));
            if (idx < 1) throw std::runtime_error("libsvm: indices are 1-based");
            row.emplace_back(idx, val);
            max_index = std::max(max_index, static_cast<size_t>(idx));
        }
        data.labels.push_back(label);
        sparse.push_back(std::move(row));
    }
    for (const auto& row : sparse) {
        std::vector<double> dense(max_index, 0.0);
        for (auto [idx, val] : row) dense[idx - 1] = val;
        data.features.push_back(std::move(dense));
    }
    return data;
}

FeatureData read_libsvm_file(const std::string& path) {
    auto in = open_in(path);
    return read_libsvm(in);
}

void write_ranking(const Ranking& r, std::ostream& out) {
    for (int i = 0; i < r.n(); ++i) out << r.sigma[i] << (i + 1 < r.n() ? ' ' : '\n');
}

Ranking read_ranking(std::istream& in) {
    Ranking r;
    int v;
    while (in >> v) r.sigma.push_back(v);
    if (!r.valid()) throw std::runtime_error("ranking: not a permutation of 1..n");
    return r;
}

void write_sample_csv(const PreferenceSample& s, std::ostream& out) {
    out << "k,y\n";
    for (int i = 0; i < s.size(); ++i) out << s.indices[i] << ',' << s.labels[i] << '\n';
}

PreferenceSample read_sample_csv(std::istream& in) {
    PreferenceSample s;
    std::string line;
    if (!std::getline(in, line) || line.rfind("k,y", 0) != 0)
        throw std::runtime_error("sample csv: missing header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const size_t comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error("sample csv: bad row");
        s.indices.push_back(std::stoi(line.substr(0, comma)));
        s.labels.push_back(std::stoi(line.substr(comma + 1)));
    }
    return s;
}

}  // namespace prefrank
