#include "derres/emit.hpp"

#include <sstream>

#include "derres/bar.hpp"
#include "derres/coker.hpp"
#include "derres/determinantal.hpp"
#include "derres/hilbert_burch.hpp"

namespace derres {

std::string matrix_text(const PolyMatrix& m) {
    std::ostringstream os;
    os << "rows:";
    for (std::size_t r = 0; r < m.rows(); ++r)
        os << " " << (m.row_labels().empty() ? std::to_string(r + 1) : m.row_labels()[r]);
    os << "\ncols:";
    for (std::size_t c = 0; c < m.cols(); ++c)
        os << " " << (m.col_labels().empty() ? std::to_string(c + 1) : m.col_labels()[c]);
    os << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (m.row_labels().empty() ? std::to_string(r + 1) : m.row_labels()[r]);
        for (std::size_t c = 0; c < m.cols(); ++c) os << " | " << m.at(r, c).str();
        os << "\n";
    }
    return os.str();
}

nlohmann::json matrix_json(const PolyMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        entries.push_back(std::move(row));
    }
    return nlohmann::json{{"rows", m.rows()},
                          {"cols", m.cols()},
                          {"row_labels", m.row_labels()},
                          {"col_labels", m.col_labels()},
                          {"entries", std::move(entries)}};
}

namespace {

std::string polys_text(const std::vector<std::pair<std::string, std::string>>& lines) {
    std::string out;
    for (const auto& [name, value] : lines) out += name + " = " + value + "\n";
    return out;
}

nlohmann::json polys_json(const std::vector<std::pair<std::string, std::string>>& lines) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [name, value] : lines) obj[name] = value;
    return obj;
}

}  // namespace

std::string emit_object(const std::string& object, int n, const std::string& format) {
    const bool json = format == "json";
    if (!json && format != "text") throw std::invalid_argument("unknown format: " + format);
    GenericMatrix g = build_generic(n);

    auto matrix_out = [&](const PolyMatrix& m) {
        return json ? matrix_json(m).dump(2) + "\n" : matrix_text(m);
    };

    if (object == "X") return matrix_out(g.X);
    if (object == "minors") {
        std::vector<std::pair<std::string, std::string>> lines;
        for (int r = 1; r <= n + 1; ++r)
            lines.emplace_back("F[" + std::to_string(r) + "]", g.minor(r).str());
        return json ? polys_json(lines).dump(2) + "\n" : polys_text(lines);
    }
    if (object == "jacobian") return matrix_out(jacobian_transpose(g).matrix);
    if (object == "partial2") return matrix_out(build_partial2(g));
    if (object == "hilbert-burch") {
        HilbertBurchAlgebra alg = build_hilbert_burch(g);
        if (json) {
            nlohmann::json obj;
            obj["d1"] = matrix_json(alg.complex.diff(1));
            obj["d2"] = matrix_json(alg.complex.diff(2));
            obj["product"] = dump_product_table(alg);
            return obj.dump(2) + "\n";
        }
        return "d1:\n" + matrix_text(alg.complex.diff(1)) + "d2:\n" +
               matrix_text(alg.complex.diff(2)) + "product:\n" + dump_product_table(alg);
    }
    if (object == "U") {
        CokernelResolution coker = build_coker_resolution(g);
        if (json) {
            nlohmann::json obj;
            obj["d1"] = matrix_json(coker.complex.diff(1));
            obj["d2"] = matrix_json(coker.complex.diff(2));
            obj["action"] = dump_action_table(coker);
            return obj.dump(2) + "\n";
        }
        return "d1:\n" + matrix_text(coker.complex.diff(1)) + "d2:\n" +
               matrix_text(coker.complex.diff(2)) + "action:\n" + dump_action_table(coker);
    }
    if (object.rfind("bar:", 0) == 0) {
        const std::string digits = object.substr(4);
        if (digits.empty() ||
            digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad bar degree in object: " + object);
        int r = std::stoi(digits);
        if (r < 1) throw std::invalid_argument("bar degree must be positive");
        HilbertBurchAlgebra alg = build_hilbert_burch(g);
        CokernelResolution coker = build_coker_resolution(g);
        BarResolution bar(g, alg, coker);
        return matrix_out(bar.differential(r));
    }
    if (object == "generators") {
        HilbertBurchAlgebra alg = build_hilbert_burch(g);
        CokernelResolution coker = build_coker_resolution(g);
        BarResolution bar(g, alg, coker);
        DerivationPresentation pres = truncate_to_der(bar);
        if (json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& gen : pres.generators) {
                nlohmann::json coords = nlohmann::json::object();
                for (const auto& [v, coeff] : gen.coords) coords[v.str()] = coeff.str();
                arr.push_back({{"name", gen.name}, {"coords", std::move(coords)}});
            }
            return arr.dump(2) + "\n";
        }
        std::string out;
        for (const auto& gen : pres.generators) out += gen.str() + "\n";
        return out;
    }
    throw std::invalid_argument("unknown object: " + object);
}

}  // namespace derres
