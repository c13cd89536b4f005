#include "radrank/io.hpp"

#include <fstream>
#include <sstream>

namespace radrank {

namespace {

const Json& field(const Json& j, const char* key, const std::string& path)
{
    if (!j.is_object()) throw FormatError(path + ": expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw FormatError(path + (path.empty() ? "" : ".") + key + ": missing field");
    return *it;
}

std::string join(const std::string& path, const char* key)
{
    return path.empty() ? key : path + "." + key;
}

std::string at(const std::string& path, std::size_t i)
{
    return path + "[" + std::to_string(i) + "]";
}

Rational rational_from_json(const Json& j, const std::string& path)
{
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) throw FormatError(path + ": expected a rational string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

}  // namespace

Json to_json(const RationalVector& v)
{
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
    return out;
}

RationalVector vector_from_json(const Json& j, const std::string& path)
{
    if (!j.is_array()) throw FormatError(path + ": expected an array of rationals");
    RationalVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = rational_from_json(j[i], at(path, i));
    return v;
}

Json to_json(const Model& m)
{
    Json primes = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) primes.push_back({{"id", m.id(i)}, {"class", to_json(m.class_of(i))}});
    return {{"ambient_rank", m.ambient_rank()}, {"primes", std::move(primes)}};
}

Model model_from_json(const Json& j)
{
    const Json& rank = field(j, "ambient_rank", "");
    if (!rank.is_number_integer() || rank.get<long long>() < 0)
        throw FormatError("ambient_rank: expected a nonnegative integer");
    const auto r = static_cast<Eigen::Index>(rank.get<long long>());
    const Json& primes = field(j, "primes", "");
    if (!primes.is_array() || primes.empty()) throw FormatError("primes: expected a nonempty array");

    std::vector<std::pair<PrimeId, RationalVector>> list;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::string path = at("primes", i);
        const Json& id = field(primes[i], "id", path);
        if (!id.is_string() || id.get<std::string>().empty()) throw FormatError(join(path, "id") + ": expected a nonempty string");
        RationalVector v = vector_from_json(field(primes[i], "class", path), join(path, "class"));
        if (v.size() != r)
            throw FormatError(join(path, "class") + ": has " + std::to_string(v.size()) + " entries, ambient_rank is " +
                              std::to_string(r));
        list.emplace_back(id.get<std::string>(), std::move(v));
    }
    try {
        return Model(r, std::move(list));
    } catch (const ArgumentError& e) {
        throw FormatError(std::string("primes: ") + e.what());
    }
}

Model parse_model(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(e.what());
    }
    return model_from_json(j);
}

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw FormatError(path.string() + ": cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

Model load_model(const std::filesystem::path& path)
{
    const Json j = read_json_file(path);
    try {
        return model_from_json(j);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

std::string serialize_model(const Model& m)
{
    return to_json(m).dump(2) + "\n";
}

Json set_to_json(const std::vector<PrimeId>& ids, PrimeSet s)
{
    Json out = Json::array();
    for (std::size_t i : s.indices()) out.push_back(ids.at(i));
    return out;
}

Json family_to_json(const std::vector<PrimeId>& ids, const Family& f)
{
    Json out = Json::array();
    for (PrimeSet s : f) out.push_back(set_to_json(ids, s));
    return out;
}

Json bijection_to_json(const PrincipalSupports& a, const PrincipalSupports& b, const PrimeBijection& eta)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < eta.size(); ++i) out.push_back(Json::array({a.id(i), b.id(eta[i])}));
    return out;
}

PrimeSet parse_support(const PrincipalSupports& v, std::string_view text)
{
    PrimeSet s;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view id = text.substr(0, comma);
        if (id.empty()) throw FormatError("support '" + std::string(text) + "': empty prime id");
        s = s.with(v.index_of(id));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return s;
}

PrimeSet set_from_json(const PrincipalSupports& v, const Json& j, const std::string& path)
{
    if (!j.is_array()) throw FormatError(path + ": expected an array of prime ids");
    PrimeSet s;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) throw FormatError(at(path, i) + ": expected a prime id");
        try {
            s = s.with(v.index_of(j[i].get<std::string>()));
        } catch (const ArgumentError& e) {
            throw FormatError(at(path, i) + ": " + e.what());
        }
    }
    return s;
}

SupportMap support_map_from_json(const Json& j, const PrincipalSupports& a, const PrincipalSupports& b)
{
    if (!j.is_array()) throw FormatError("phi: expected an array of support pairs");
    SupportMap phi;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string path = at("phi", i);
        if (!j[i].is_array() || j[i].size() != 2) throw FormatError(path + ": expected a pair of supports");
        const PrimeSet x = set_from_json(a, j[i][0], path + "[0]");
        const PrimeSet y = set_from_json(b, j[i][1], path + "[1]");
        if (!phi.emplace(x, y).second) throw FormatError(path + ": support listed twice");
    }
    return phi;
}

Json to_json(const SupportMap& phi, const PrincipalSupports& a, const PrincipalSupports& b)
{
    Family domain;
    for (const auto& kv : phi) domain.push_back(kv.first);
    canonicalize(domain);
    Json out = Json::array();
    for (PrimeSet x : domain) out.push_back(Json::array({set_to_json(a.ids(), x), set_to_json(b.ids(), phi.at(x))}));
    return out;
}

GeneratorSet generators_from_json(const Json& j)
{
    if (j.is_array()) {
        const Eigen::Index dim = j.empty() ? 0 : static_cast<Eigen::Index>(j[0].is_array() ? j[0].size() : 0);
        RationalMatrix cols(dim, static_cast<Eigen::Index>(j.size()));
        for (std::size_t i = 0; i < j.size(); ++i) {
            const RationalVector v = vector_from_json(j[i], at("vectors", i));
            if (v.size() != dim) throw FormatError(at("vectors", i) + ": dimension differs from the first vector");
            cols.col(static_cast<Eigen::Index>(i)) = v;
        }
        return GeneratorSet::from_columns(cols);
    }
    const Json& dim = field(j, "dimension", "");
    if (!dim.is_number_integer() || dim.get<long long>() < 0) throw FormatError("dimension: expected a nonnegative integer");
    GeneratorSet out(static_cast<Eigen::Index>(dim.get<long long>()));
    const Json& vectors = field(j, "vectors", "");
    if (!vectors.is_array()) throw FormatError("vectors: expected an array");
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        const std::string path = at("vectors", i);
        const Json& label = field(vectors[i], "label", path);
        if (!label.is_string()) throw FormatError(join(path, "label") + ": expected a string");
        RationalVector v = vector_from_json(field(vectors[i], "coords", path), join(path, "coords"));
        try {
            out.add(label.get<std::string>(), v);
        } catch (const std::invalid_argument& e) {
            throw FormatError(path + ": " + e.what());
        }
    }
    return out;
}

}  // namespace radrank
