#include "twr/io.hpp"

#include <random>
#include <set>
#include <sstream>

namespace twr {
namespace {

struct Line {
    int number = 0;
    std::vector<std::string> words;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ws(raw);
        Line line{number, {}};
        std::string word;
        while (ws >> word) line.words.push_back(word);
        if (!line.words.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& msg) { throw ParseError(line.number, msg); }

void expect_arity(const Line& line, size_t lo, size_t hi) {
    size_t args = line.words.size() - 1;
    if (args < lo || args > hi)
        fail(line, "'" + line.words[0] + "' takes " +
                       (lo == hi ? std::to_string(lo)
                                 : std::to_string(lo) + " to " + std::to_string(hi)) +
                       " arguments, got " + std::to_string(args));
}

long long parse_int(const Line& line, const std::string& word) {
    try {
        size_t used = 0;
        long long v = std::stoll(word, &used);
        if (used != word.size()) throw std::invalid_argument(word);
        return v;
    } catch (const std::exception&) {
        fail(line, "expected an integer, got '" + word + "'");
    }
}

Rat parse_rat(const Line& line, const std::string& word) {
    try {
        Rat r = Rat::parse(word);
        if (r.is_infinite()) throw std::invalid_argument(word);
        return r;
    } catch (const std::exception&) {
        fail(line, "expected a rational number, got '" + word + "'");
    }
}

}  // namespace

ParseError::ParseError(int line_no, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}

InstanceFile parse_instance(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw ParseError(0, "empty instance file");

    size_t at = 0;
    const Line& magic = lines[at];
    if (magic.words[0] != "twr") fail(magic, "instance files start with 'twr 1'");
    expect_arity(magic, 1, 1);
    if (magic.words[1] != "1") fail(magic, "unsupported format version '" + magic.words[1] + "'");
    ++at;

    if (at >= lines.size() || lines[at].words[0] != "metric")
        throw ParseError(at < lines.size() ? lines[at].number : magic.number,
                         "expected 'metric tree' or 'metric graph' after the header");
    const Line& metric = lines[at];
    expect_arity(metric, 1, 1);
    MetricKind kind;
    if (metric.words[1] == "tree")
        kind = MetricKind::tree;
    else if (metric.words[1] == "graph")
        kind = MetricKind::graph;
    else
        fail(metric, "metric kind must be 'tree' or 'graph', got '" + metric.words[1] + "'");
    ++at;

    int nodes = 0;
    std::vector<Edge> edges;
    std::vector<Request> requests;
    std::set<long long> seen_request_id;

    auto check_node = [&](const Line& line, long long id) {
        if (id < 0 || id >= nodes)
            fail(line, "unknown node " + std::to_string(id) + " (declared: " +
                           std::to_string(nodes) + ")");
        return static_cast<int>(id);
    };

    for (; at < lines.size(); ++at) {
        const Line& line = lines[at];
        const std::string& head = line.words[0];
        if (head == "node") {
            expect_arity(line, 1, 1);
            long long id = parse_int(line, line.words[1]);
            if (id != nodes)
                fail(line, "node ids must be declared densely in order; expected " +
                               std::to_string(nodes) + ", got " + std::to_string(id));
            ++nodes;
        } else if (head == "edge") {
            expect_arity(line, 3, 3);
            int u = check_node(line, parse_int(line, line.words[1]));
            int v = check_node(line, parse_int(line, line.words[2]));
            Rat w = parse_rat(line, line.words[3]);
            if (!(w > Rat(0))) fail(line, "edge weights must be positive");
            if (u == v) fail(line, "self-loop on node " + std::to_string(u));
            edges.push_back({u, v, w});
        } else if (head == "request") {
            expect_arity(line, 4, 5);
            long long id = parse_int(line, line.words[1]);
            if (id < 0 || id > 1000000)
                fail(line, "request id " + std::to_string(id) + " out of range");
            if (!seen_request_id.insert(id).second)
                fail(line, "duplicate request id " + std::to_string(id));
            Request r;
            r.id = static_cast<int>(id);
            r.node = check_node(line, parse_int(line, line.words[2]));
            r.start = parse_rat(line, line.words[3]);
            r.length = parse_rat(line, line.words[4]);
            if (!(r.length > Rat(0))) fail(line, "window lengths must be positive");
            if (line.words.size() == 6) {
                r.profit = parse_int(line, line.words[5]);
                if (r.profit <= 0) fail(line, "profits must be positive");
            }
            requests.push_back(r);
        } else {
            fail(line, "unknown directive '" + head + "'");
        }
    }

    if (nodes == 0) throw ParseError(metric.number, "instance declares no nodes");

    InstanceFile file;
    try {
        file.inst = build_metric(nodes, kind, std::move(edges));
    } catch (const std::exception& e) {
        throw ParseError(metric.number, e.what());
    }
    file.requests = std::move(requests);
    return file;
}

std::string format_instance(const Instance& inst, const std::vector<Request>& requests) {
    std::ostringstream out;
    out << "twr 1\n";
    out << "metric " << (inst.kind == MetricKind::tree ? "tree" : "graph") << "\n";
    for (int i = 0; i < inst.nodes; ++i) out << "node " << i << "\n";
    for (const Edge& e : inst.edges)
        out << "edge " << e.u << " " << e.v << " " << e.w.to_string() << "\n";
    for (const Request& r : requests)
        out << "request " << r.id << " " << r.node << " " << r.start.to_string() << " "
            << r.length.to_string() << " " << r.profit << "\n";
    return out.str();
}

SolutionFile parse_solution(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw ParseError(0, "empty solution file");

    const Line& head = lines[0];
    if (head.words[0] != "solution")
        fail(head, "solution files start with 'solution repairman' or 'solution deliveryman'");
    expect_arity(head, 1, 1);

    SolutionFile sol;
    if (head.words[1] == "repairman")
        sol.kind = SolutionKind::repairman;
    else if (head.words[1] == "deliveryman")
        sol.kind = SolutionKind::deliveryman;
    else
        fail(head, "solution kind must be 'repairman' or 'deliveryman'");

    bool have_speed = false;
    for (size_t at = 1; at < lines.size(); ++at) {
        const Line& line = lines[at];
        const std::string& word = line.words[0];
        if (word == "speed") {
            expect_arity(line, 1, 1);
            if (sol.kind == SolutionKind::repairman)
                fail(line, "repairman solutions run at speed 1; no speed line allowed");
            if (have_speed) fail(line, "duplicate speed line");
            sol.run.speed = parse_rat(line, line.words[1]);
            if (sol.run.speed.is_negative()) fail(line, "speed must be nonnegative");
            if (!sol.run.events.empty()) fail(line, "speed must come before the events");
            have_speed = true;
        } else if (word == "event") {
            expect_arity(line, 2, 2);
            ServiceEvent ev;
            ev.request_id = static_cast<int>(parse_int(line, line.words[1]));
            ev.time = parse_rat(line, line.words[2]);
            sol.run.events.push_back(ev);
        } else {
            fail(line, "unknown directive '" + word + "'");
        }
    }

    if (sol.kind == SolutionKind::deliveryman && !have_speed)
        throw ParseError(head.number, "deliveryman solutions need a speed line");
    return sol;
}

std::string format_solution(const SolutionFile& sol) {
    std::ostringstream out;
    out << "solution "
        << (sol.kind == SolutionKind::repairman ? "repairman" : "deliveryman") << "\n";
    if (sol.kind == SolutionKind::deliveryman)
        out << "speed " << sol.run.speed.to_string() << "\n";
    for (const ServiceEvent& ev : sol.run.events)
        out << "event " << ev.request_id << " " << ev.time.to_string() << "\n";
    return out.str();
}

namespace {

// mt19937_64 output is pinned by the standard, so this stays reproducible
// across library implementations, unlike the distribution adaptors.
long long pick(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

}  // namespace

InstanceFile generate_random(unsigned long long seed, const RandomParams& params) {
    if (params.nodes < 1) throw std::invalid_argument("generate_random: need at least one node");
    if (params.requests < 0) throw std::invalid_argument("generate_random: negative request count");
    if (params.min_length < Rat(1))
        throw std::invalid_argument("generate_random: window lengths must be at least 1");
    if (params.max_length < params.min_length)
        throw std::invalid_argument("generate_random: empty window length range");
    if (params.horizon < 0) throw std::invalid_argument("generate_random: negative horizon");

    std::mt19937_64 rng(seed);

    std::vector<Edge> edges;
    for (int i = 1; i < params.nodes; ++i) {
        int parent = static_cast<int>(pick(rng, 0, i - 1));
        Rat w(pick(rng, 1, 8), 1LL << pick(rng, 0, 3));
        edges.push_back({parent, i, w});
    }
    if (params.kind == MetricKind::graph && params.nodes > 2) {
        for (int extra = params.nodes / 2; extra > 0; --extra) {
            int a = static_cast<int>(pick(rng, 0, params.nodes - 1));
            int b = static_cast<int>(pick(rng, 0, params.nodes - 1));
            if (a == b) continue;
            Rat w(pick(rng, 1, 8), 1LL << pick(rng, 0, 3));
            edges.push_back({a, b, w});
        }
    }

    InstanceFile file;
    file.inst = build_metric(params.nodes, params.kind, std::move(edges));

    long long len_steps = ((params.max_length - params.min_length) * Rat(8)).floor_ll();
    for (int i = 0; i < params.requests; ++i) {
        Request r;
        r.id = i;
        r.node = static_cast<int>(pick(rng, 0, params.nodes - 1));
        r.start = Rat(pick(rng, 0, 4LL * params.horizon), 4);
        r.length = params.min_length + Rat(pick(rng, 0, len_steps), 8);
        r.profit = pick(rng, 1, 3);
        file.requests.push_back(r);
    }
    return file;
}

InstanceFile generate_partition(const std::vector<long long>& values) {
    if (values.empty()) throw std::invalid_argument("generate_partition: empty multiset");
    long long sum = 0;
    for (long long v : values) {
        if (v <= 0) throw std::invalid_argument("generate_partition: values must be positive");
        sum += v;
    }
    if (sum % 2 != 0) throw std::invalid_argument("generate_partition: odd sum");
    Rat k(sum / 2);

    // Node 0 is the hub u, 1 is s, 2 is t, 3 is the midpoint v, and the
    // values hang off the hub after them.
    std::vector<Edge> edges;
    edges.push_back({0, 1, Rat(6) * k});
    edges.push_back({0, 2, Rat(6) * k});
    edges.push_back({0, 3, k});
    for (size_t i = 0; i < values.size(); ++i)
        edges.push_back({0, static_cast<int>(4 + i), Rat(values[i])});

    InstanceFile file;
    file.inst = build_metric(static_cast<int>(4 + values.size()), MetricKind::tree,
                             std::move(edges));

    // Half-open windows of length 6K. The windows that a tight schedule
    // services at their closing moment get shifted up by one half so that
    // moment stays inside.
    Rat len = Rat(6) * k;
    Rat half(1, 2);
    file.requests.push_back({0, 1, Rat(0), len, 1});
    file.requests.push_back({1, 2, Rat(12) * k + half, len, 1});
    file.requests.push_back({2, 0, Rat(6) * k, len, 1});
    file.requests.push_back({3, 3, Rat(3) * k + half, len, 1});
    file.requests.push_back({4, 3, Rat(9) * k, len, 1});
    for (size_t i = 0; i < values.size(); ++i)
        file.requests.push_back(
            {static_cast<int>(5 + i), static_cast<int>(4 + i), Rat(6) * k, len, 1});
    return file;
}

}  // namespace twr
