#include <lgraph/cli.hpp>
#include <lgraph/error.hpp>

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace lgraph {

namespace {

// Shortest decimal that reads back as the same double.
std::string shortest(double v)
{
    char buf[40];
    for (int digits = 1; digits <= 17; ++digits) {
        std::snprintf(buf, sizeof buf, "%.*g", digits, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    std::string s = buf;
    return v < 0 ? "(" + s + ")" : s;
}

std::string squares(int dim, int power)
{
    std::string s;
    for (int k = 1; k <= dim; ++k) s += (k > 1 ? "+" : "") + ("x" + std::to_string(k)) + "^" + std::to_string(power);
    return s;
}

std::vector<double> parse_numbers(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos)
            throw ArgumentError("invalid number '" + item + "' in example id");
        out.push_back(v);
    }
    return out;
}

} // namespace

ExampleId parse_example_id(const std::string& text)
{
    std::string name = text;
    std::vector<double> params;
    const auto open = text.find('(');
    if (open != std::string::npos) {
        if (text.back() != ')') throw ArgumentError("malformed example id '" + text + "'");
        name = text.substr(0, open);
        params = parse_numbers(text.substr(open + 1, text.size() - open - 2));
    }
    ExampleId id;
    if (name == "saddle" || name == "quartic") {
        if (!params.empty()) throw ArgumentError("example '" + name + "' takes no parameters");
        id.kind = name == "saddle" ? ExampleId::Kind::saddle : ExampleId::Kind::quartic;
    } else if (name == "quad-iso") {
        if (params.size() > 1) throw ArgumentError("quad-iso takes one parameter c");
        id.kind = ExampleId::Kind::quad_iso;
        if (!params.empty()) id.c = params[0];
    } else if (name == "affine") {
        if (params.size() == 1 || params.size() > 2) throw ArgumentError("affine takes parameters (a, c)");
        id.kind = ExampleId::Kind::affine;
        id.c = 0.0;
        if (params.size() == 2) {
            id.a = {params[0]};
            id.c = params[1];
        }
    } else {
        throw ArgumentError("unknown example id '" + text + "' (expected affine, quad-iso, saddle or quartic)");
    }
    return id;
}

GeneratedExample generate_example(const ExampleId& id, int dim)
{
    if (dim < 2) throw ArgumentError("examples require dim >= 2");
    std::string text;
    switch (id.kind) {
    case ExampleId::Kind::affine: {
        if (id.a.size() != 1 && id.a.size() != static_cast<std::size_t>(dim))
            throw ArgumentError("affine slope must have 1 or dim entries");
        for (int k = 0; k < dim; ++k) {
            const double a = id.a.size() == 1 ? id.a[0] : id.a[k];
            text += (k ? "+" : "") + shortest(a) + "*x" + std::to_string(k + 1);
        }
        if (id.c != 0.0) text += "+" + shortest(id.c / 2.0) + "*(" + squares(dim, 2) + ")";
        break;
    }
    case ExampleId::Kind::quad_iso: text = shortest(id.c / 2.0) + "*(" + squares(dim, 2) + ")"; break;
    case ExampleId::Kind::saddle:
        if (dim != 2) throw ArgumentError("the saddle example is defined for dim 2 only");
        text = "0.5*(x1^2-x2^2)";
        break;
    case ExampleId::Kind::quartic: text = squares(dim, 4); break;
    }
    GridDomain domain(std::vector<double>(dim, -1.0), std::vector<double>(dim, 1.0), std::vector<int>(dim, 41));
    Expression e = parse(text, dim);
    return {std::move(text), std::move(e), std::move(domain)};
}

} // namespace lgraph
