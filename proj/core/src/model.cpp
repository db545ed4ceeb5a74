#include "twoclub/model.hpp"

namespace twoclub {

std::string to_string(Model m) {
    switch (m) {
    case Model::robust: return "robust";
    case Model::hereditary: return "hereditary";
    case Model::connected: return "connected";
    }
    return "?";
}

Model model_from_string(const std::string& name) {
    if (name == "robust") return Model::robust;
    if (name == "hereditary") return Model::hereditary;
    if (name == "connected") return Model::connected;
    throw std::invalid_argument("unknown model '" + name + "'");
}

} // namespace twoclub
