#pragma once

#include <stdexcept>
#include <string>

namespace twoclub {

enum class Model { robust, hereditary, connected };

std::string to_string(Model m);
Model model_from_string(const std::string& name);

/// Which of the three well-connectedness variants to solve for, plus the
/// strength parameter t. Valid ranges: t >= 1 for robust/connected, t >= 0
/// for hereditary.
struct ModelSpec {
    Model model = Model::robust;
    int t = 1;

    void validate() const {
        if (model == Model::hereditary) {
            if (t < 0) throw std::invalid_argument("hereditary model requires t >= 0");
        } else {
            if (t < 1) throw std::invalid_argument("robust/connected models require t >= 1");
        }
    }

    /// Smallest admissible solution size. Robust and connected solutions need
    /// more than t vertices; for hereditary any nonempty clique qualifies.
    int min_solution_size() const {
        return model == Model::hereditary ? 1 : t + 1;
    }

    /// Low Degree Rule threshold: vertices of alive-degree below this cannot
    /// be part of a solution (hereditary: of a solution of size >= t+1).
    int low_degree_threshold() const {
        return model == Model::hereditary ? t + 1 : t;
    }

    /// No Choice Rule threshold: a nonadjacent marked pair with exactly this
    /// many alive common neighbors forces all of them into the solution.
    int no_choice_threshold() const {
        switch (model) {
        case Model::robust: return t;
        case Model::hereditary: return t + 1;
        case Model::connected: return 1;
        }
        return 0;
    }

    /// True when the plain-2-club base case applies (then degree-one vertices
    /// may be removed, provided the incumbent was seeded with max-degree+1).
    bool base_case() const {
        return model == Model::hereditary ? t == 0 : t == 1;
    }

    bool operator==(const ModelSpec&) const = default;
};

} // namespace twoclub
