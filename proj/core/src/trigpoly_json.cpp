#include "ramanpt/trigpoly.hpp"

#include <nlohmann/json.hpp>

namespace ramanpt {

using nlohmann::json;

json space_to_json(const SpaceSpec& space)
{
    return json{{"atomic_dim", space.atomic_dim},
                {"buffer", space.buffer},
                {"fock_cutoff", space.fock_cutoff},
                {"mode_count", space.mode_count}};
}

SpaceSpec space_from_json(const json& j)
{
    SpaceSpec s;
    s.atomic_dim = j.at("atomic_dim").get<int>();
    s.mode_count = j.at("mode_count").get<int>();
    s.fock_cutoff = j.at("fock_cutoff").get<int>();
    s.buffer = j.at("buffer").get<int>();
    s.validate();
    return s;
}

json operator_to_json(const Operator& op)
{
    const Matrix& m = op.matrix();
    json re = json::array();
    json im = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row_re = json::array();
        json row_im = json::array();
        for (Index j = 0; j < m.cols(); ++j) {
            row_re.push_back(m(i, j).real());
            row_im.push_back(m(i, j).imag());
        }
        re.push_back(std::move(row_re));
        im.push_back(std::move(row_im));
    }
    return json{{"imag", std::move(im)}, {"real", std::move(re)}};
}

Operator operator_from_json(const json& j, const SpaceSpec& space)
{
    const auto& re = j.at("real");
    const auto& im = j.at("imag");
    const Index n = space.dimension();
    if (static_cast<Index>(re.size()) != n || static_cast<Index>(im.size()) != n)
        throw SpaceMismatch("serialized operator has wrong row count");
    Matrix m(n, n);
    for (Index r = 0; r < n; ++r) {
        if (static_cast<Index>(re[r].size()) != n || static_cast<Index>(im[r].size()) != n)
            throw SpaceMismatch("serialized operator has wrong column count");
        for (Index c = 0; c < n; ++c)
            m(r, c) = cplx(re[r][c].get<double>(), im[r][c].get<double>());
    }
    return {space, std::move(m)};
}

json tp_to_json(const TrigPolyOp& f)
{
    json terms = json::array();
    for (const auto& [key, a] : f.terms()) {
        json t = operator_to_json(a);
        t["coeffs"] = key.coeffs;
        terms.push_back(std::move(t));
    }
    return json{{"basis", {{"labels", f.basis().labels}, {"values", f.basis().values}}},
                {"space", space_to_json(f.space())},
                {"terms", std::move(terms)}};
}

TrigPolyOp tp_from_json(const json& j)
{
    FreqBasis basis(j.at("basis").at("labels").get<std::vector<std::string>>(),
                    j.at("basis").at("values").get<std::vector<double>>());
    const SpaceSpec space = space_from_json(j.at("space"));
    TrigPolyOp f(basis, space);
    for (const auto& t : j.at("terms")) {
        FreqKey key{t.at("coeffs").get<std::vector<int>>()};
        f.add_term(key, operator_from_json(t, space));
    }
    return f;
}

} // namespace ramanpt
