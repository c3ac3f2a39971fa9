#include "hypermod/json_io.hpp"

namespace hypermod {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const QuadFieldElem& a) {
    Json c = Json::array();
    for (const auto& x : a.coords()) c.push_back(to_string(x));
    return {{"d1", a.d1()}, {"d2", a.d2()}, {"coords", c}};
}

Json to_json(const Ball& b) {
    return {{"mid_man", b.mid().man.get_str()},
            {"mid_exp", std::to_string(b.mid().exp)},
            {"rad_man", b.rad().man.get_str()},
            {"rad_exp", std::to_string(b.rad().exp)}};
}

Json to_json(const PowerSeries& s) {
    Json c = Json::array();
    for (const auto& x : s.coeffs()) c.push_back(to_string(x));
    return {{"var", s.var()}, {"order", s.order()}, {"coeffs", c}};
}

QuadFieldElem qf_from_json(const Json& j) {
    const auto& c = j.at("coords");
    if (c.size() != 4) throw std::invalid_argument("field element needs 4 coordinates");
    return QuadFieldElem(j.at("d1").get<long>(), j.at("d2").get<long>(),
                         parse_rational(c[0].get<std::string>()),
                         parse_rational(c[1].get<std::string>()),
                         parse_rational(c[2].get<std::string>()),
                         parse_rational(c[3].get<std::string>()));
}

PowerSeries series_from_json(const Json& j) {
    std::vector<Rational> c;
    for (const auto& x : j.at("coeffs")) c.push_back(parse_rational(x.get<std::string>()));
    PowerSeries s(j.at("var").get<std::string>(), std::move(c));
    if (s.order() != j.at("order").get<long>()) throw std::invalid_argument("order/length mismatch");
    return s;
}

Ball ball_from_json(const Json& j) {
    Dyadic mid(Integer(j.at("mid_man").get<std::string>()), std::stol(j.at("mid_exp").get<std::string>()));
    Dyadic rad(Integer(j.at("rad_man").get<std::string>()), std::stol(j.at("rad_exp").get<std::string>()));
    return Ball(mid, rad);
}

}  // namespace hypermod
