#include "hb/coefficient_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hb/errors.hpp"

namespace hb {

namespace {
using nlohmann::json;
}

std::string format_double17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_coefficients(const std::string& path, const CoefficientVector& coeffs) {
    coeffs.validate();
    std::ostringstream out;
    out << "{\n";
    out << "  \"format_version\": 1,\n";
    out << "  \"basis\": {\n";
    out << "    \"kind\": \"" << to_string(coeffs.spec.kind) << "\",\n";
    if (coeffs.spec.domain.bounded()) {
        out << "    \"domain\": [" << format_double17(coeffs.spec.domain.lo) << ", "
            << format_double17(coeffs.spec.domain.hi) << "],\n";
    } else {
        out << "    \"domain\": \"real-line\",\n";
    }
    out << "    \"K\": " << coeffs.spec.K << "\n";
    out << "  },\n";
    out << "  \"entries\": [\n";
    for (std::size_t i = 0; i < coeffs.entries.size(); ++i) {
        out << "    [" << format_double17(coeffs.entries[i].real()) << ", "
            << format_double17(coeffs.entries[i].imag()) << "]"
            << (i + 1 < coeffs.entries.size() ? "," : "") << "\n";
    }
    out << "  ]\n";
    out << "}\n";

    std::ofstream f(path);
    if (!f) throw io_error("cannot open for writing: " + path);
    f << out.str();
    f.flush();
    if (!f) throw io_error("write failure: " + path);
}

CoefficientVector read_coefficients(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw io_error("cannot open coefficient file: " + path);

    json doc;
    try {
        doc = json::parse(f);
    } catch (const json::parse_error& e) {
        throw io_error("coefficient file is not valid JSON: " + path + " (" + e.what() + ")");
    }

    try {
        if (!doc.is_object() || !doc.contains("format_version") ||
            !doc.contains("basis") || !doc.contains("entries"))
            throw invalid_input("coefficient file missing required fields");
        if (doc["format_version"].get<int>() != 1)
            throw invalid_input("unsupported coefficient file version");

        const json& jb = doc["basis"];
        const std::string kind = jb.at("kind").get<std::string>();
        const int K = jb.at("K").get<int>();

        BasisSpec spec;
        spec.K = K;
        if (kind == "fourier") {
            spec.kind = BasisKind::Fourier;
            const auto dom = jb.at("domain").get<std::vector<double>>();
            if (dom.size() != 2) throw invalid_input("domain must be [lo, hi]");
            spec.domain = Domain::periodic(dom[0], dom[1]);
        } else if (kind == "cosine") {
            spec.kind = BasisKind::Cosine;
            const auto dom = jb.at("domain").get<std::vector<double>>();
            if (dom.size() != 2) throw invalid_input("domain must be [lo, hi]");
            spec.domain = Domain::interval(dom[0], dom[1]);
        } else if (kind == "hermite") {
            spec.kind = BasisKind::Hermite;
            if (jb.at("domain").get<std::string>() != "real-line")
                throw invalid_input("hermite basis requires domain \"real-line\"");
            spec.domain = Domain::real_line();
        } else {
            throw invalid_input("unknown basis kind: '" + kind + "'");
        }

        const json& je = doc["entries"];
        if (!je.is_array() || static_cast<int>(je.size()) != spec.N())
            throw invalid_input("entry count does not match K and basis kind");
        std::vector<cplx> entries;
        entries.reserve(je.size());
        for (const json& pair : je) {
            if (!pair.is_array() || pair.size() != 2)
                throw invalid_input("each entry must be a [re, im] pair");
            entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
        return CoefficientVector(spec, std::move(entries));
    } catch (const json::exception& e) {
        throw invalid_input("coefficient file violates the format contract: " +
                            std::string(e.what()));
    }
}

} // namespace hb
