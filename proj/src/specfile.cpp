#include "workbench/specfile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "workbench/errors.hpp"
#include "workbench/parser.hpp"

namespace workbench {

using nlohmann::json;

namespace {

const json& require(const json& doc, const std::string& key, const std::string& path) {
    if (!doc.is_object() || !doc.contains(key))
        throw SchemaError(path + "/" + key, "missing required field " + path + "/" + key);
    return doc.at(key);
}

int require_int(const json& doc, const std::string& key, const std::string& path) {
    const json& v = require(doc, key, path);
    if (!v.is_number_integer())
        throw SchemaError(path + "/" + key, path + "/" + key + " must be an integer");
    return v.get<int>();
}

Rational rational_from(const json& v, const std::string& path) {
    try {
        if (v.is_string()) return Rational::parse(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long>());
    } catch (const SyntaxError&) {
    }
    throw SchemaError(path, path + " must be a rational literal like \"3/4\"");
}

std::vector<int> int_list(const json& v, const std::string& path) {
    if (!v.is_array() || v.empty())
        throw SchemaError(path, path + " must be a nonempty array of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number_integer())
            throw SchemaError(path + "/" + std::to_string(i), "expected an integer");
        out.push_back(v[i].get<int>());
    }
    return out;
}

TrinomialData variety_from(const json& doc) {
    TrinomialData data;
    data.type = require_int(doc, "type", "");
    if (data.type != 1 && data.type != 2) throw SchemaError("/type", "/type must be 1 or 2");
    data.m = doc.contains("m") ? require_int(doc, "m", "") : 0;

    const json& blocks = require(doc, "blocks", "");
    if (!blocks.is_array() || blocks.empty())
        throw SchemaError("/blocks", "/blocks must be a nonempty array");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        std::string path = "/blocks/" + std::to_string(i);
        const json& entry = blocks[i];
        if (entry.is_array()) {
            data.exponents.push_back(int_list(entry, path));
        } else {
            data.exponents.push_back(int_list(require(entry, "l", path), path + "/l"));
        }
    }

    const json& a = require(doc, "A", "");
    if (data.type == 1) {
        if (!a.is_array()) throw SchemaError("/A", "/A must be an array of rationals");
        for (std::size_t i = 0; i < a.size(); ++i)
            data.constants1.push_back(rational_from(a[i], "/A/" + std::to_string(i)));
    } else {
        if (!a.is_array() || a.size() != 2)
            throw SchemaError("/A", "/A must be a 2-row matrix of rationals");
        for (std::size_t row = 0; row < 2; ++row) {
            if (!a[row].is_array())
                throw SchemaError("/A/" + std::to_string(row), "matrix rows must be arrays");
            for (std::size_t i = 0; i < a[row].size(); ++i)
                data.constants2[row].push_back(
                    rational_from(a[row][i], "/A/" + std::to_string(row) + "/" + std::to_string(i)));
        }
    }
    return data;
}

SparsePolynomial poly_from(const json& v, const std::string& path, const VariableBounds& bounds) {
    if (!v.is_string()) throw SchemaError(path, path + " must be a polynomial string");
    try {
        return parse_polynomial(v.get<std::string>(), bounds);
    } catch (const SyntaxError& e) {
        throw SyntaxError(e.position(), e.expected(), "at " + path + ": " + e.what());
    } catch (const UnknownVariableError& e) {
        throw UnknownVariableError(e.variable(), "at " + path + ": " + e.what());
    }
}

}  // namespace

std::string fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << h;
    return out.str();
}

SpecFile parse_spec_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("", std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("", "spec file must be a JSON object");

    SpecFile spec;
    spec.digest = fnv1a64(text);
    spec.variety = variety_from(doc);
    VariableBounds bounds = spec.variety.bounds();

    if (doc.contains("derivations")) {
        const json& ds = doc.at("derivations");
        if (!ds.is_object()) throw SchemaError("/derivations", "/derivations must be an object");
        for (const auto& [name, entry] : ds.items()) {
            std::string base = "/derivations/" + name;
            if (!entry.is_object()) throw SchemaError(base, base + " must map variables to polynomials");
            std::map<VarId, SparsePolynomial> images;
            for (const auto& [var_text, poly_text] : entry.items()) {
                std::string path = base + "/" + var_text;
                SparsePolynomial var_poly = poly_from(json(var_text), path, bounds);
                if (var_poly.term_count() != 1 || !var_poly.leading_term().second.is_one() ||
                    var_poly.leading_term().first.exponents().size() != 1 ||
                    var_poly.leading_term().first.total_degree() != 1)
                    throw SchemaError(path, path + " key must be a single variable name");
                VarId v = var_poly.leading_term().first.exponents().begin()->first;
                images[v] = poly_from(poly_text, path, bounds);
            }
            spec.derivations.emplace(name, std::move(images));
        }
    }

    if (doc.contains("invariant")) {
        const json& inv = doc.at("invariant");
        spec.invariant = RationalFunction{
            poly_from(require(inv, "num", "/invariant"), "/invariant/num", bounds),
            poly_from(require(inv, "den", "/invariant"), "/invariant/den", bounds)};
    }

    if (doc.contains("options")) {
        const json& opt = doc.at("options");
        if (!opt.is_object()) throw SchemaError("/options", "/options must be an object");
        if (opt.contains("epsilon")) spec.options.epsilon = opt.at("epsilon").get<double>();
        if (opt.contains("cap")) spec.options.cap = opt.at("cap").get<int>();
        if (opt.contains("maxImageDegree"))
            spec.options.max_image_degree = opt.at("maxImageDegree").get<int>();
        if (opt.contains("spotPairs")) spec.options.spot_pairs = opt.at("spotPairs").get<int>();
        if (opt.contains("sampleCount")) spec.options.sample_count = opt.at("sampleCount").get<int>();
        if (opt.contains("degree")) {
            std::vector<mpz_class> g0;
            for (const auto& entry : int_list(opt.at("degree"), "/options/degree"))
                g0.emplace_back(entry);
            spec.options.degree = std::move(g0);
        }
        if (opt.contains("hypersurface")) {
            const json& h = opt.at("hypersurface");
            spec.options.hk = require_int(h, "k", "/options/hypersurface");
            spec.options.hb = int_list(require(h, "b", "/options/hypersurface"), "/options/hypersurface/b");
            spec.options.hc = int_list(require(h, "c", "/options/hypersurface"), "/options/hypersurface/c");
            spec.options.hr = int_list(require(h, "r", "/options/hypersurface"), "/options/hypersurface/r");
        }
    }
    return spec;
}

SpecFile parse_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open spec file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_spec_text(buffer.str());
}

}  // namespace workbench
