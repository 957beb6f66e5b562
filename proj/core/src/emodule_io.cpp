#include "sqcheck/emodule_io.hpp"

#include <json.hpp>

#include "sqcheck/errors.hpp"

namespace sqcheck {

using nlohmann::json;

std::string dump_module_json(const EModule& m, int indent)
{
    json j;
    j["label"] = m.label();
    j["max_degree"] = m.max_degree();
    json degrees = json::array();
    for (int d = 0; d <= m.max_degree(); ++d) {
        degrees.push_back({{"degree", d}, {"dim", m.dim(d)}, {"labels", m.labels(d)}});
    }
    j["degrees"] = std::move(degrees);
    for (auto q : {Primitive::Q0, Primitive::Q1}) {
        json triples = json::array();
        const int s = degree_shift(q);
        for (int d = 0; d + s <= m.max_degree(); ++d) {
            const auto& mat = m.matrix(q, d);
            for (std::size_t r = 0; r < mat.rows(); ++r) {
                for (auto c : mat.row(r).ones()) {
                    triples.push_back({d, r, c});
                }
            }
        }
        j[q == Primitive::Q0 ? "q0" : "q1"] = std::move(triples);
    }
    return j.dump(indent);
}

EModule load_module_json(std::string_view text)
{
    try {
        const auto j = json::parse(text);
        const int top = j.at("max_degree").get<int>();
        if (top < 0) {
            throw DomainError("negative max_degree");
        }
        std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(top + 1));
        for (const auto& entry : j.at("degrees")) {
            const int d = entry.at("degree").get<int>();
            if (d < 0 || d > top) {
                throw DomainError("degree entry outside truncation");
            }
            labels[static_cast<std::size_t>(d)] = entry.at("labels").get<std::vector<std::string>>();
            if (labels[static_cast<std::size_t>(d)].size() != entry.at("dim").get<std::size_t>()) {
                throw DomainError("dim and label count disagree at degree " + std::to_string(d));
            }
        }
        std::array<std::vector<BitMatrix>, 2> mats;
        for (auto q : {Primitive::Q0, Primitive::Q1}) {
            const int s = degree_shift(q);
            auto& out = mats[static_cast<std::size_t>(q)];
            for (int d = 0; d + s <= top; ++d) {
                out.emplace_back(labels[static_cast<std::size_t>(d)].size(),
                                 labels[static_cast<std::size_t>(d + s)].size());
            }
            for (const auto& t : j.at(q == Primitive::Q0 ? "q0" : "q1")) {
                const int d = t.at(0).get<int>();
                const auto r = t.at(1).get<std::size_t>();
                const auto c = t.at(2).get<std::size_t>();
                if (d < 0 || d + s > top || r >= out[static_cast<std::size_t>(d)].rows() ||
                    c >= out[static_cast<std::size_t>(d)].cols()) {
                    throw DomainError("matrix entry out of range");
                }
                out[static_cast<std::size_t>(d)].set(r, c);
            }
        }
        return EModule(j.at("label").get<std::string>(), std::move(labels), GradedMap(1, std::move(mats[0])),
                       GradedMap(3, std::move(mats[1])));
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed module JSON: ") + e.what());
    }
}

} // namespace sqcheck
