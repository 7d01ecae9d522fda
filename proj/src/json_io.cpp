#include "desalg/json_io.hpp"

namespace desalg {

WeightVector weight_vector_from_json(int n, const ordered_json& j) {
    if (!j.is_object())
        throw std::invalid_argument("weight vector: expected a JSON object");
    std::map<Composition, Rat> w;
    for (auto it = j.begin(); it != j.end(); ++it) {
        Composition alpha = Composition::parse(it.key());
        if (alpha.n() != n)
            throw std::invalid_argument("weight vector: '" + it.key() +
                                        "' is not a composition of " + std::to_string(n));
        Rat c = Rat::parse(it.value().get<std::string>());
        if (c.sign() < 0)
            throw std::invalid_argument("weight vector: negative weight for '" + it.key() + "'");
        if (!c.is_zero()) w.emplace(std::move(alpha), std::move(c));
    }
    return WeightVector(n, std::move(w));
}

} // namespace desalg
