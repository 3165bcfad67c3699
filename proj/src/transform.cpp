#include "twr/transform.hpp"

#include <stdexcept>

namespace twr {

std::pair<Instance, std::vector<Request>> service_time_transform(
    const Instance& inst, const std::vector<Request>& requests, ServiceTimeModel model,
    const std::vector<Rat>& durations) {
    if (durations.size() != requests.size())
        throw std::invalid_argument("service_time_transform: one duration per request");
    for (const Rat& mu : durations) {
        if (mu.is_negative() || mu.is_infinite())
            throw std::invalid_argument("service_time_transform: duration must be finite and >= 0");
        if (model == ServiceTimeModel::contained && !(mu < Rat(1)))
            throw std::invalid_argument("service_time_transform: contained model needs mu < 1");
    }

    Instance out = inst;
    std::vector<Request> out_reqs = requests;
    for (size_t i = 0; i < out_reqs.size(); ++i) {
        const Rat& mu = durations[i];
        if (mu.is_zero()) continue;
        Request& r = out_reqs[i];
        Rat half = mu / Rat(2);
        if (model == ServiceTimeModel::contained && !(mu < r.length))
            throw std::invalid_argument(
                "service_time_transform: duration leaves an empty window");

        int pendant = out.nodes++;
        out.edges.push_back({r.node, pendant, half});
        for (auto& row : out.dist) row.push_back(Rat(0));
        out.dist.emplace_back(out.nodes, Rat(0));
        for (int z = 0; z < out.nodes - 1; ++z) {
            Rat dz = out.dist[r.node][z] + half;
            out.dist[pendant][z] = dz;
            out.dist[z][pendant] = dz;
        }
        out.dist[pendant][pendant] = Rat(0);

        r.node = pendant;
        r.start += half;
        if (model == ServiceTimeModel::contained) r.length -= mu;
    }
    return {std::move(out), std::move(out_reqs)};
}

std::pair<Instance, std::vector<Request>> service_time_transform(
    const Instance& inst, const std::vector<Request>& requests, ServiceTimeModel model,
    const Rat& uniform_duration) {
    return service_time_transform(inst, requests, model,
                                  std::vector<Rat>(requests.size(), uniform_duration));
}

}  // namespace twr
