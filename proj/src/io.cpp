#include "mixbiotic/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace mixbiotic::io {

std::string format_double(double x) {
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    if (std::isnan(x))
        return "nan";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

double parse_double(const std::string& s) {
    if (s == "inf" || s == "Infinity")
        return std::numeric_limits<double>::infinity();
    if (s == "-inf")
        return -std::numeric_limits<double>::infinity();
    double x = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw FormatError("not a number: '" + s + "'");
    return x;
}

namespace {

json number_or_inf(double x) {
    if (std::isinf(x))
        return format_double(x);
    return x;
}

double read_number(const json& j, const char* key) {
    if (!j.contains(key))
        throw FormatError(std::string("missing field '") + key + "'");
    const auto& v = j.at(key);
    if (v.is_string())
        return parse_double(v.get<std::string>());
    if (!v.is_number())
        throw FormatError(std::string("field '") + key + "' is not a number");
    return v.get<double>();
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
        out.push_back(cell);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r')
        s.pop_back();
    return s;
}

} // namespace

json to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [i, j] : g.edges())
        edges.push_back({i, j});
    return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw FormatError("edge entries must be [i, j] pairs");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return Graph(n, edges);
    } catch (const json::exception& e) {
        throw FormatError(std::string("graph JSON: ") + e.what());
    } catch (const GraphError& e) {
        throw FormatError(std::string("graph JSON: ") + e.what());
    }
}

json to_json(const GraphStats& s) {
    return {{"vertex_count", s.vertex_count},
            {"edge_count", s.edge_count},
            {"diameter", number_or_inf(s.diameter)},
            {"mean_distance", number_or_inf(s.mean_distance)},
            {"density", s.density},
            {"mean_clustering", s.mean_clustering}};
}

GraphStats graph_stats_from_json(const json& j) {
    GraphStats s;
    s.vertex_count = static_cast<int>(read_number(j, "vertex_count"));
    s.edge_count = static_cast<std::int64_t>(read_number(j, "edge_count"));
    s.diameter = read_number(j, "diameter");
    s.mean_distance = read_number(j, "mean_distance");
    s.density = read_number(j, "density");
    s.mean_clustering = read_number(j, "mean_clustering");
    return s;
}

json to_json(const DatasetMeta& m) {
    return {{"t_count", m.t_count}, {"t_max", m.t_max}, {"vertex_count", m.vertex_count}, {"dropped_rows", m.dropped_rows}};
}

DatasetMeta dataset_meta_from_json(const json& j) {
    DatasetMeta m;
    m.t_count = static_cast<long>(read_number(j, "t_count"));
    m.t_max = static_cast<long>(read_number(j, "t_max"));
    m.vertex_count = static_cast<int>(read_number(j, "vertex_count"));
    m.dropped_rows = static_cast<long>(read_number(j, "dropped_rows"));
    return m;
}

json to_json(const MeasureSetD& m) {
    return {{"mu_I", m.mu_I},     {"var_I", m.var_I},   {"mu_L", m.mu_L},     {"var_L", m.var_L},
            {"mu_LR", m.mu_LR},   {"var_LR", m.var_LR}, {"mu_S", m.mu_S},     {"var_S", m.var_S},
            {"m_atom", m.m_atom}, {"m_mix", m.m_mix},   {"m_mob", m.m_mob},   {"delta_count", m.delta_count}};
}

MeasureSetD measure_set_from_json(const json& j) {
    MeasureSetD m;
    m.mu_I = read_number(j, "mu_I");
    m.var_I = read_number(j, "var_I");
    m.mu_L = read_number(j, "mu_L");
    m.var_L = read_number(j, "var_L");
    m.mu_LR = read_number(j, "mu_LR");
    m.var_LR = read_number(j, "var_LR");
    m.mu_S = read_number(j, "mu_S");
    m.var_S = read_number(j, "var_S");
    m.m_atom = read_number(j, "m_atom");
    m.m_mix = read_number(j, "m_mix");
    m.m_mob = read_number(j, "m_mob");
    m.delta_count = static_cast<long>(read_number(j, "delta_count"));
    return m;
}

void write_trace_csv(std::ostream& out, const std::vector<Eigen::VectorXd>& states) {
    const Eigen::Index n = states.empty() ? 0 : states.front().size();
    out << 't';
    for (Eigen::Index i = 0; i < n; ++i)
        out << ",q_" << i;
    out << '\n';
    for (std::size_t t = 0; t < states.size(); ++t) {
        if (states[t].size() != n)
            throw FormatError("trace states differ in dimension");
        out << t;
        for (Eigen::Index i = 0; i < n; ++i)
            out << ',' << format_double(states[t][i]);
        out << '\n';
    }
}

std::vector<Eigen::VectorXd> read_trace_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw FormatError("empty trace CSV");
    const auto header = split_csv(strip_cr(line));
    if (header.empty() || header.front() != "t")
        throw FormatError("trace CSV header must start with 't'");
    const auto n = static_cast<Eigen::Index>(header.size() - 1);
    std::vector<Eigen::VectorXd> states;
    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (line.empty())
            continue;
        const auto cells = split_csv(line);
        if (static_cast<Eigen::Index>(cells.size()) != n + 1)
            throw FormatError("trace CSV row " + std::to_string(states.size()) + " has " +
                              std::to_string(cells.size()) + " cells, expected " + std::to_string(n + 1));
        Eigen::VectorXd q(n);
        for (Eigen::Index i = 0; i < n; ++i)
            q[i] = parse_double(cells[static_cast<std::size_t>(i + 1)]);
        states.push_back(std::move(q));
    }
    return states;
}

void write_sparse_row(std::ostream& out, long t, const SparseSnapshot& q) {
    json nz = json::array();
    for (SparseSnapshot::InnerIterator it(q); it; ++it)
        nz.push_back({it.index(), it.value()});
    out << json{{"t", t}, {"n", q.size()}, {"nz", std::move(nz)}}.dump() << '\n';
}

void write_trace_jsonl(std::ostream& out, const std::vector<SparseSnapshot>& trace) {
    for (std::size_t t = 0; t < trace.size(); ++t)
        write_sparse_row(out, static_cast<long>(t), trace[t]);
}

std::vector<SparseSnapshot> read_trace_jsonl(std::istream& in) {
    std::vector<SparseSnapshot> trace;
    std::string line;
    Eigen::Index n = -1;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        json row;
        try {
            row = json::parse(line);
        } catch (const json::exception& e) {
            throw FormatError(std::string("sparse trace row: ") + e.what());
        }
        const auto& nz = row.at("nz");
        Eigen::Index dim = row.contains("n") ? row.at("n").get<Eigen::Index>() : -1;
        if (dim < 0) {
            for (const auto& e : nz)
                dim = std::max<Eigen::Index>(dim, e.at(0).get<Eigen::Index>() + 1);
            dim = std::max<Eigen::Index>(dim, n);
        }
        if (n >= 0 && dim != n)
            throw FormatError("sparse trace rows differ in dimension");
        n = dim;
        std::vector<std::pair<Eigen::Index, double>> entries;
        for (const auto& e : nz)
            entries.emplace_back(e.at(0).get<Eigen::Index>(), e.at(1).get<double>());
        std::sort(entries.begin(), entries.end());
        SparseSnapshot q(n);
        for (const auto& [i, v] : entries) {
            if (i < 0 || i >= n)
                throw FormatError("sparse trace index out of range");
            if (v != 0.0)
                q.insertBack(i) = v;
        }
        trace.push_back(std::move(q));
    }
    // Dimension may only be known after all rows when "n" is absent.
    for (auto& q : trace)
        q.conservativeResize(n);
    return trace;
}

std::vector<Eigen::VectorXd> read_trace_any(std::istream& in) {
    const auto c = (in >> std::ws).peek();
    if (c == '{') {
        std::vector<Eigen::VectorXd> out;
        for (const auto& q : read_trace_jsonl(in))
            out.push_back(Eigen::VectorXd(q));
        return out;
    }
    return read_trace_csv(in);
}

void write_grid_csv(std::ostream& out, const PhaseGrid& grid) {
    out << grid_csv_header << '\n';
    for (const auto& c : grid.cells) {
        const auto& m = c.measures;
        for (double v : {c.point.g, c.point.d, m.mu_I, m.var_I, m.mu_L, m.var_L, m.mu_LR, m.var_LR, m.mu_S, m.var_S,
                         m.m_atom, m.m_mix, m.m_mob, c.norm_atom, c.norm_mix, c.norm_mob})
            out << format_double(v) << ',';
        out << phase_name(c.phase) << '\n';
    }
}

PhaseGrid read_grid_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != grid_csv_header)
        throw FormatError("grid CSV header mismatch");
    PhaseGrid grid;
    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (line.empty())
            continue;
        const auto cells = split_csv(line);
        if (cells.size() != 17)
            throw FormatError("grid CSV row has " + std::to_string(cells.size()) + " cells, expected 17");
        std::vector<double> v;
        for (std::size_t i = 0; i < 16; ++i)
            v.push_back(parse_double(cells[i]));
        GridCell c;
        c.point = {v[0], v[1]};
        auto& m = c.measures;
        m.mu_I = v[2];
        m.var_I = v[3];
        m.mu_L = v[4];
        m.var_L = v[5];
        m.mu_LR = v[6];
        m.var_LR = v[7];
        m.mu_S = v[8];
        m.var_S = v[9];
        m.m_atom = v[10];
        m.m_mix = v[11];
        m.m_mob = v[12];
        c.norm_atom = v[13];
        c.norm_mix = v[14];
        c.norm_mob = v[15];
        c.phase = parse_phase(cells[16]);
        grid.cells.push_back(c);
    }
    return grid;
}

std::vector<MeshPoint> read_mesh(std::istream& in) {
    std::vector<MeshPoint> points;
    std::string line;
    while (std::getline(in, line)) {
        line = strip_cr(line);
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        for (char& ch : line)
            if (ch == ',' || ch == '\t')
                ch = ' ';
        std::istringstream ss(line);
        std::string gs, ds;
        if (!(ss >> gs))
            continue;
        if (!(ss >> ds))
            throw FormatError("mesh line needs two values: '" + line + "'");
        points.push_back({parse_double(gs), parse_double(ds)});
    }
    return points;
}

void write_polar_csv(std::ostream& out, const std::vector<PolarPoint>& points) {
    out << "t,r,theta\n";
    for (std::size_t t = 0; t < points.size(); ++t)
        out << t << ',' << format_double(points[t].r) << ',' << format_double(points[t].theta) << '\n';
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw FormatError("cannot write '" + path + "'");
    out << content;
    if (!out)
        throw FormatError("write failed for '" + path + "'");
}

} // namespace mixbiotic::io
