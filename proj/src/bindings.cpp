#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twr/deliveryman.hpp"
#include "twr/io.hpp"
#include "twr/multiwindow.hpp"
#include "twr/oracle.hpp"
#include "twr/rational.hpp"
#include "twr/repairman.hpp"
#include "twr/schedule.hpp"
#include "twr/trimming.hpp"

namespace py = pybind11;
using namespace twr;

PYBIND11_MODULE(_twr, m) {
    m.doc() = "Time-windowed repairman and deliveryman planning";

    py::class_<Rat>(m, "Rat")
        .def(py::init<long long>(), py::arg("n") = 0)
        .def(py::init<long long, long long>())
        .def_static("parse", &Rat::parse)
        .def_static("infinity", &Rat::infinity)
        .def("is_infinite", &Rat::is_infinite)
        .def("to_double", &Rat::to_double)
        .def("__str__", &Rat::to_string)
        .def("__repr__", [](const Rat& r) { return "Rat(" + r.to_string() + ")"; })
        .def("__hash__", [](const Rat& r) { return py::hash(py::str(r.to_string())); })
        .def("__eq__", [](const Rat& a, const Rat& b) { return a == b; })
        .def("__ne__", [](const Rat& a, const Rat& b) { return a != b; })
        .def("__lt__", [](const Rat& a, const Rat& b) { return a < b; })
        .def("__le__", [](const Rat& a, const Rat& b) { return a <= b; })
        .def("__gt__", [](const Rat& a, const Rat& b) { return a > b; })
        .def("__ge__", [](const Rat& a, const Rat& b) { return a >= b; })
        .def("__add__", [](const Rat& a, const Rat& b) { return a + b; })
        .def("__sub__", [](const Rat& a, const Rat& b) { return a - b; })
        .def("__mul__", [](const Rat& a, const Rat& b) { return a * b; })
        .def("__truediv__", [](const Rat& a, const Rat& b) { return a / b; });

    py::enum_<MetricKind>(m, "MetricKind")
        .value("tree", MetricKind::tree)
        .value("graph", MetricKind::graph);

    py::class_<Edge>(m, "Edge")
        .def(py::init([](int u, int v, const Rat& w) { return Edge{u, v, w}; }), py::arg("u"),
             py::arg("v"), py::arg("w"))
        .def_readwrite("u", &Edge::u)
        .def_readwrite("v", &Edge::v)
        .def_readwrite("w", &Edge::w);

    py::class_<Request>(m, "Request")
        .def(py::init([](int id, int node, const Rat& start, const Rat& length,
                         long long profit) { return Request{id, node, start, length, profit}; }),
             py::arg("id"), py::arg("node"), py::arg("start"), py::arg("length"),
             py::arg("profit") = 1)
        .def_readwrite("id", &Request::id)
        .def_readwrite("node", &Request::node)
        .def_readwrite("start", &Request::start)
        .def_readwrite("length", &Request::length)
        .def_readwrite("profit", &Request::profit)
        .def("window_end", &Request::window_end)
        .def("window_contains", &Request::window_contains);

    py::class_<Instance>(m, "Instance")
        .def_readonly("nodes", &Instance::nodes)
        .def_readonly("kind", &Instance::kind)
        .def_readonly("edges", &Instance::edges)
        .def("d", &Instance::d, py::return_value_policy::copy);

    m.def("build_metric", &build_metric, py::arg("nodes"), py::arg("kind"), py::arg("edges"));
    m.def("total_profit", &total_profit);

    py::class_<ServiceEvent>(m, "ServiceEvent")
        .def(py::init([](int id, const Rat& t) { return ServiceEvent{id, t}; }),
             py::arg("request_id"), py::arg("time"))
        .def_readwrite("request_id", &ServiceEvent::request_id)
        .def_readwrite("time", &ServiceEvent::time);

    py::class_<Run>(m, "Run")
        .def(py::init<>())
        .def_readwrite("events", &Run::events)
        .def_readwrite("speed", &Run::speed);

    py::class_<Tour>(m, "Tour")
        .def(py::init<>())
        .def_readwrite("run", &Tour::run)
        .def_readwrite("covers_all", &Tour::covers_all);

    py::class_<Violation>(m, "Violation")
        .def_property_readonly("kind", [](const Violation& v) { return violation_name(v.kind); })
        .def_readonly("request_id", &Violation::request_id)
        .def_readonly("detail", &Violation::detail);

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("feasible", &VerifyReport::feasible)
        .def_readonly("violations", &VerifyReport::violations);

    py::class_<OrderItem>(m, "OrderItem")
        .def_readonly("node", &OrderItem::node)
        .def_readonly("release", &OrderItem::release)
        .def_readonly("deadline", &OrderItem::deadline);

    m.def("run_profit", &run_profit);
    m.def(
        "verify_run",
        [](const Instance& inst, const std::vector<Request>& requests, const Run& run,
           bool require_all) { return verify_run(inst, requests, run, nullptr, require_all); },
        py::arg("instance"), py::arg("requests"), py::arg("run"), py::arg("require_all") = false);
    m.def("fixed_order_min_speed", &fixed_order_min_speed);

    py::class_<TrimmedInstance>(m, "TrimmedInstance")
        .def("included_requests", &TrimmedInstance::included_requests)
        .def("window_map", [](const TrimmedInstance& t) {
            std::map<int, std::pair<Rat, Rat>> out;
            for (const auto& [id, w] : t.window_map()) out[id] = {w.start, w.end};
            return out;
        });

    m.def("trim_unit", &trim_unit);
    m.def("trim_earliest_half", &trim_earliest_half);

    py::enum_<SolveMode>(m, "SolveMode")
        .value("tree", SolveMode::tree)
        .value("graph", SolveMode::graph);

    m.def(
        "solve_repairman",
        [](const Instance& inst, const TrimmedInstance& trimmed, SolveMode mode) {
            return solve_repairman(inst, trimmed, mode);
        },
        py::arg("instance"), py::arg("trimmed"), py::arg("mode"));

    m.def(
        "window12",
        [](const Instance& inst, const std::vector<Request>& requests, SolveMode mode) {
            return window12(inst, requests, mode);
        },
        py::arg("instance"), py::arg("requests"), py::arg("mode"));
    m.def(
        "windowg",
        [](const Instance& inst, const std::vector<Request>& requests, int p, int g,
           SolveMode mode) { return windowg(inst, requests, p, g, mode); },
        py::arg("instance"), py::arg("requests"), py::arg("p"), py::arg("g"), py::arg("mode"));
    m.def(
        "windowgd",
        [](const Instance& inst, const std::vector<Request>& requests, int p, int g,
           SolveMode mode) { return windowgd(inst, requests, p, g, mode); },
        py::arg("instance"), py::arg("requests"), py::arg("p"), py::arg("g"), py::arg("mode"));

    py::class_<DeliveryResult>(m, "DeliveryResult")
        .def_readonly("speed", &DeliveryResult::speed)
        .def_readonly("tour", &DeliveryResult::tour)
        .def_readonly("visit_order", &DeliveryResult::visit_order);

    m.def("delivery_tree", &delivery_tree, py::arg("instance"), py::arg("trimmed"),
          py::arg("epsilon"));
    m.def("delivery_graph", &delivery_graph, py::arg("instance"), py::arg("trimmed"));
    m.def(
        "delivery_bounded",
        [](const Instance& inst, const std::vector<Request>& requests, const Rat& epsilon) {
            return delivery_bounded(inst, requests, epsilon);
        },
        py::arg("instance"), py::arg("requests"), py::arg("epsilon"));

    py::class_<OracleBudget>(m, "OracleBudget")
        .def(py::init<>())
        .def_readwrite("max_requests", &OracleBudget::max_requests)
        .def_readwrite("max_nodes", &OracleBudget::max_nodes)
        .def_readwrite("time_limit_seconds", &OracleBudget::time_limit_seconds);

    py::class_<RepairmanOracleResult>(m, "RepairmanOracleResult")
        .def_readonly("profit", &RepairmanOracleResult::profit)
        .def_readonly("run", &RepairmanOracleResult::run);

    py::class_<DeliverymanOracleResult>(m, "DeliverymanOracleResult")
        .def_readonly("speed", &DeliverymanOracleResult::speed)
        .def_readonly("order", &DeliverymanOracleResult::order);

    m.def(
        "brute_repairman",
        [](const Instance& inst, const std::vector<Request>& requests, OracleBudget budget) {
            return brute_repairman(inst, requests, nullptr, budget);
        },
        py::arg("instance"), py::arg("requests"), py::arg("budget") = OracleBudget{});
    m.def(
        "brute_deliveryman",
        [](const Instance& inst, const std::vector<Request>& requests, OracleBudget budget) {
            return brute_deliveryman(inst, requests, nullptr, budget);
        },
        py::arg("instance"), py::arg("requests"), py::arg("budget") = OracleBudget{});

    py::class_<InstanceFile>(m, "InstanceFile")
        .def_readwrite("inst", &InstanceFile::inst)
        .def_readwrite("requests", &InstanceFile::requests);

    py::enum_<SolutionKind>(m, "SolutionKind")
        .value("repairman", SolutionKind::repairman)
        .value("deliveryman", SolutionKind::deliveryman);

    py::class_<SolutionFile>(m, "SolutionFile")
        .def(py::init<>())
        .def_readwrite("kind", &SolutionFile::kind)
        .def_readwrite("run", &SolutionFile::run);

    py::register_exception<ParseError>(m, "ParseError");

    m.def("parse_instance", &parse_instance);
    m.def("format_instance", &format_instance);
    m.def("parse_solution", &parse_solution);
    m.def("format_solution", &format_solution);

    py::class_<RandomParams>(m, "RandomParams")
        .def(py::init<>())
        .def_readwrite("nodes", &RandomParams::nodes)
        .def_readwrite("kind", &RandomParams::kind)
        .def_readwrite("requests", &RandomParams::requests)
        .def_readwrite("min_length", &RandomParams::min_length)
        .def_readwrite("max_length", &RandomParams::max_length)
        .def_readwrite("horizon", &RandomParams::horizon);

    m.def("generate_random", &generate_random, py::arg("seed"), py::arg("params"));
    m.def("generate_partition", &generate_partition, py::arg("values"));
}
