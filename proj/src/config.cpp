#include "blog/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace blog {

cplx complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw std::invalid_argument("expected a number or [re, im], got " + j.dump());
}

json complex_to_json(cplx z) {
    if (z.imag() == 0.0) return z.real();
    return json::array({z.real(), z.imag()});
}

namespace {

const std::string& family_of(const json& j) {
    if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
        throw std::invalid_argument("model config needs a string \"family\" field");
    return j["family"].get_ref<const std::string&>();
}

TubeDomain tube_from_json(const json& j) {
    if (j.contains("preset")) {
        const auto p = j["preset"].get<std::string>();
        if (p == "fold") return fold_tube();
        if (p == "spiral") return spiral_tube();
        throw std::invalid_argument("unknown tube preset '" + p + "'");
    }
    std::vector<cplx> pts;
    for (const auto& q : j.at("centerline")) pts.push_back(complex_from_json(q));
    return TubeDomain(std::move(pts), j.at("halfwidth").get<double>());
}

}  // namespace

ModelPtr model_from_json(const json& j) {
    const auto& fam = family_of(j);
    ModelPtr m;
    if (fam == "exp") {
        m = exp_model(complex_from_json(j.at("lambda")), j.value("R_prime", 2.0));
    } else if (fam == "cosine") {
        m = cosine_model(complex_from_json(j.at("a")), complex_from_json(j.at("b")), j.at("R_prime").get<double>());
    } else if (fam == "tube") {
        return tube_model(tube_from_json(j));
    } else if (fam == "compose") {
        std::vector<ModelPtr> parts;
        for (const auto& q : j.at("models")) parts.push_back(model_from_json(q));
        return compose(std::move(parts), j.value("a", 0.0));
    } else {
        throw std::invalid_argument("unknown B_log family '" + fam + "'");
    }
    return j.value("normalize", true) ? normalize(m) : m;
}

EntireModel entire_from_json(const json& j) {
    const auto& fam = family_of(j);
    if (fam == "exp") return entire_exp(complex_from_json(j.at("lambda")));
    if (fam == "cosine") return entire_cosine(complex_from_json(j.at("a")), complex_from_json(j.at("b")));
    if (fam == "poincare") return entire_poincare(complex_from_json(j.at("c")));
    if (fam == "compose") {
        std::vector<EntireModel> parts;
        for (const auto& q : j.at("models")) parts.push_back(entire_from_json(q));
        return entire_compose(std::move(parts));
    }
    throw std::invalid_argument("unknown entire family '" + fam + "'");
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

json load_json_arg(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
        try {
            return json::parse(arg);
        } catch (const json::parse_error& e) {
            throw std::invalid_argument(std::string("inline JSON: ") + e.what());
        }
    }
    return read_json_file(arg);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace blog
