#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "desalg/bidigare.hpp"
#include "desalg/exact_linalg.hpp"
#include "desalg/face_algebra.hpp"
#include "desalg/group_algebra.hpp"
#include "desalg/knapsack.hpp"

namespace desalg {

using ordered_json = nlohmann::ordered_json;

/// {"one-line permutation": "scalar"}, keys in increasing rank order.
template <class K>
ordered_json element_to_json(const GroupElem<K>& a) {
    ordered_json j = ordered_json::object();
    for (const auto& [w, c] : a.support_perms()) j[w.str()] = c.str();
    return j;
}

template <class K>
GroupElem<K> element_from_json(int n, const ordered_json& j) {
    GroupElem<K> out(n);
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Permutation w = Permutation::parse(it.key());
        if (w.n() != n) throw std::invalid_argument("element_from_json: degree mismatch");
        out.add_coeff(w.rank(), K::parse(it.value().template get<std::string>()));
    }
    return out;
}

/// {"face": "scalar"}, keys in canonical face order.
template <class K>
ordered_json element_to_json(const FaceElem<K>& a) {
    const FaceBasis& basis = FaceBasis::get(a.n());
    ordered_json j = ordered_json::object();
    a.for_each([&](int i, const K& c) { j[basis.face(i).str()] = c.str(); });
    return j;
}

/// {"composition": "scalar"} (B-basis coordinates).
template <class K>
ordered_json element_to_json(const DescentElem<K>& x) {
    ordered_json j = ordered_json::object();
    for (const auto& [alpha, c] : x.coords) j[alpha.str()] = c.str();
    return j;
}

inline ordered_json spectrum_to_json(const std::vector<long long>& s) {
    ordered_json j = ordered_json::array();
    for (long long v : s) j.push_back(std::to_string(v));
    return j;
}

inline ordered_json spectrum_to_json(const std::vector<Rat>& s) {
    ordered_json j = ordered_json::array();
    for (const Rat& v : s) j.push_back(v.str());
    return j;
}

/// Coefficient array, lowest degree first, as exact strings.
template <class K>
ordered_json poly_to_json(const Polynomial<K>& f) {
    ordered_json j = ordered_json::array();
    for (const K& c : f.coeffs()) j.push_back(c.str());
    return j;
}

/// Weight file: {"composition": "rational"}; unknown compositions are
/// rejected, missing ones default to 0, negatives are rejected.
WeightVector weight_vector_from_json(int n, const ordered_json& j);

} // namespace desalg
