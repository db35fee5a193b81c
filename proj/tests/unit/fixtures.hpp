#pragma once

#include "telecity/params.hpp"

#include <random>

namespace fixtures {

inline telecity::CityParams benchmark() { return telecity::CityParams{}; }

// telework firms first appear at the CBD fringe
inline telecity::CityParams cbd_host() { return benchmark().with_telework_cost(6.0); }

// telework firms first appear at the urban fringe
inline telecity::CityParams urban_host() { return benchmark().with("beta_t", 0.9).with_telework_cost(7.0); }

inline std::mt19937_64 rng(unsigned seed = 20240611u) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

} // namespace fixtures

#include "telecity/error.hpp"

#include <doctest.h>

#define CHECK_MODEL_ERROR(expr, expected_kind)                                            \
    do {                                                                                  \
        bool thrown_ = false;                                                             \
        try {                                                                             \
            (void)(expr);                                                                 \
        } catch (const telecity::ModelError& e_) {                                        \
            thrown_ = true;                                                               \
            CHECK_MESSAGE(e_.kind() == telecity::ErrorKind::expected_kind, e_.what());    \
        }                                                                                 \
        CHECK_MESSAGE(thrown_, "expected ModelError " #expected_kind);                    \
    } while (0)
