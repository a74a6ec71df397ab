#include "ouc/json_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace ouc {

using nlohmann::ordered_json;

namespace {

// Folds -0.0 into 0.0 so serialized coefficients diff cleanly.
double clean_zero(double v) { return v == 0.0 ? 0.0 : v; }

}  // namespace

std::string polynomial_to_json(const Polynomial& p) {
    ordered_json doc;
    doc["n_vars"] = p.n_vars();
    doc["terms"] = ordered_json::array();
    for (const auto& [key, c] : p.terms()) {
        ordered_json term;
        term["a"] = key.a;
        term["b"] = key.b;
        term["re"] = clean_zero(c.real());
        term["im"] = clean_zero(c.imag());
        doc["terms"].push_back(std::move(term));
    }
    return doc.dump();
}

Polynomial polynomial_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("polynomial JSON parse error: ") + e.what());
    }
    if (!doc.contains("n_vars") || !doc.contains("terms")) {
        throw std::invalid_argument("polynomial JSON needs n_vars and terms");
    }
    Polynomial p(doc["n_vars"].get<int>());
    for (const auto& term : doc["terms"]) {
        Monomial key{term["a"].get<std::vector<int>>(), term["b"].get<std::vector<int>>()};
        for (int e : key.a) {
            if (e < 0) throw std::invalid_argument("negative exponent in polynomial JSON");
        }
        for (int e : key.b) {
            if (e < 0) throw std::invalid_argument("negative exponent in polynomial JSON");
        }
        p.add_to_coefficient(key, Complex(term["re"].get<double>(), term["im"].get<double>()));
    }
    return p;
}

std::string expansion_to_json(const ChaosExpansion& e) {
    ordered_json doc;
    doc["n_vars"] = e.n_vars();
    doc["coeffs"] = ordered_json::array();
    for (const auto& [idx, raw] : e.raw_terms()) {
        const Complex c = e.coefficient(idx);
        ordered_json entry;
        entry["m"] = idx.m;
        entry["n"] = idx.n;
        entry["re"] = clean_zero(c.real());
        entry["im"] = clean_zero(c.imag());
        doc["coeffs"].push_back(std::move(entry));
    }
    return doc.dump();
}

}  // namespace ouc
