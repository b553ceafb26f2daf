#include "romik/json_io.hpp"

#include <json.hpp>

namespace romik {

using nlohmann::json;

namespace {
json jrat(const Rational& r) {
    return json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}
json jz(const ZRoot2& z) {
    return json{{"rat", jrat(z.rat)}, {"irr", jrat(z.irr)}};
}
json jtower(const QuadTower& t) {
    return json{{"base", jz(t.base())}, {"coeff", jz(t.coeff())}, {"disc", t.disc().get_str()}};
}
Rational prat(const json& j) {
    return Rational(Int(j.at("num").get<std::string>()), Int(j.at("den").get<std::string>()));
}
ZRoot2 pz(const json& j) { return ZRoot2(prat(j.at("rat")), prat(j.at("irr"))); }
} // namespace

std::string json_of(const Rational& r) { return jrat(r).dump(); }
std::string json_of(const ZRoot2& z) { return jz(z).dump(); }
std::string json_of(const QuadTower& t) { return jtower(t).dump(); }

std::string json_of(const PythTriple& t) {
    return json{{"a", t.a.get_str()}, {"b", t.b.get_str()}, {"c", t.c.get_str()}}.dump();
}

std::string json_of(const MarkoffTriple& t) {
    return json{{"x", t.x.get_str()}, {"y1", t.y1.get_str()}, {"y2", t.y2.get_str()}}.dump();
}

std::string json_of(const DigitWord& w) {
    return json{{"head", w.head()}, {"period", w.period()}}.dump();
}

Rational rational_from_json(const std::string& text) { return prat(json::parse(text)); }
ZRoot2 zroot2_from_json(const std::string& text) { return pz(json::parse(text)); }

QuadTower quadtower_from_json(const std::string& text) {
    json j = json::parse(text);
    return QuadTower(pz(j.at("base")), pz(j.at("coeff")), Int(j.at("disc").get<std::string>()));
}

PythTriple triple_from_json(const std::string& text) {
    json j = json::parse(text);
    return PythTriple(Int(j.at("a").get<std::string>()), Int(j.at("b").get<std::string>()),
                      Int(j.at("c").get<std::string>()));
}

} // namespace romik
