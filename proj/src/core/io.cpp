#include "io.hpp"

#include <sstream>

#include <json.hpp>

namespace weyldft {

namespace {

using json = nlohmann::ordered_json;

json header(AlgebraType type, SignHom sigma, Int M) {
    json j;
    j["algebra"] = to_string(type);
    j["sigma"] = to_string(sigma);
    j["M"] = M;
    return j;
}

}  // namespace

std::string points_to_json(const PointSet& F) {
    json j = header(F.type, F.sigma, F.M);
    json arr = json::array();
    for (const GridPoint& p : F.points) {
        json rec;
        rec["kac"] = p.kac;
        rec["q"] = p.q;
        rec["eps"] = p.eps;
        arr.push_back(std::move(rec));
    }
    j["count"] = F.points.size();
    j["points"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string points_to_csv(const PointSet& F) {
    std::ostringstream out;
    const int n = F.type.rank;
    for (int i = 0; i <= n; ++i) out << "kac_" << i << ",";
    for (int i = 1; i <= n; ++i) out << "q_" << i << ",";
    out << "eps\n";
    for (const GridPoint& p : F.points) {
        for (Int v : p.kac) out << v << ",";
        for (Int v : p.q) out << v << ",";
        out << p.eps << "\n";
    }
    return out.str();
}

std::string weights_to_json(const WeightSet& L) {
    json j = header(L.type, L.sigma, L.M);
    json arr = json::array();
    for (const WeightEntry& w : L.weights) {
        json rec;
        rec["kac"] = w.kac;
        rec["h"] = w.h;
        arr.push_back(std::move(rec));
    }
    j["count"] = L.weights.size();
    j["weights"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string weights_to_csv(const WeightSet& L) {
    std::ostringstream out;
    const int n = L.type.rank;
    for (int i = 0; i <= n; ++i) out << "kac_" << i << ",";
    out << "h\n";
    for (const WeightEntry& w : L.weights) {
        for (Int v : w.kac) out << v << ",";
        out << w.h << "\n";
    }
    return out.str();
}

std::vector<Complex> samples_from_json(const std::string& text, const PointSet& F) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        fail(ErrorCode::InvalidArgument, std::string("bad sample JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("values") || !j["values"].is_array())
        fail(ErrorCode::InvalidArgument, "sample JSON needs a 'values' array");
    if (j.value("algebra", to_string(F.type)) != to_string(F.type) ||
        j.value("sigma", to_string(F.sigma)) != to_string(F.sigma) ||
        j.value("M", F.M) != F.M)
        fail(ErrorCode::GridMismatch, "sample header does not match the requested grid");
    const json& vals = j["values"];
    if (vals.size() != F.points.size())
        fail(ErrorCode::GridMismatch,
             "sample count " + std::to_string(vals.size()) + " does not match grid size " +
                 std::to_string(F.points.size()));
    std::vector<Complex> out;
    out.reserve(vals.size());
    for (const json& v : vals) {
        if (v.is_number()) {
            out.emplace_back(v.get<double>(), 0.0);
        } else if (v.is_object()) {
            out.emplace_back(v.value("re", 0.0), v.value("im", 0.0));
        } else {
            fail(ErrorCode::InvalidArgument, "sample values must be numbers or {re, im} objects");
        }
    }
    return out;
}

std::string spectrum_to_json(const WeightSet& L, const std::vector<Complex>& coeffs) {
    json j = header(L.type, L.sigma, L.M);
    json arr = json::array();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        json rec;
        rec["kac"] = L.weights[i].kac;
        rec["re"] = coeffs[i].real();
        rec["im"] = coeffs[i].imag();
        arr.push_back(std::move(rec));
    }
    j["count"] = coeffs.size();
    j["coefficients"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string hartley_spectrum_to_json(const WeightSet& L, const std::vector<double>& coeffs) {
    json j = header(L.type, L.sigma, L.M);
    json arr = json::array();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        json rec;
        rec["kac"] = L.weights[i].kac;
        rec["d"] = coeffs[i];
        arr.push_back(std::move(rec));
    }
    j["count"] = coeffs.size();
    j["coefficients"] = std::move(arr);
    return j.dump(2) + "\n";
}

}  // namespace weyldft
