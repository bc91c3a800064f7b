// io.cpp
#include "mub/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mub::io {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string quote(const std::string& s) {
    return json(s).dump();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
    if (!out) throw ParseError("write failed for " + path);
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    return j;
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
    return *it;
}

}  // namespace

// -------------------------------- mvs-1 --------------------------------------

std::string system_to_json(const UnitVectorSystem& sys) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"format_version\": \"mvs-1\",\n";
    os << "  \"d\": " << sys.d() << ",\n";
    os << "  \"n\": " << sys.n() << ",\n";
    os << "  \"vectors\": [\n";
    for (int i = 0; i < sys.n(); ++i) {
        os << "    [";
        for (int x = 0; x < sys.d(); ++x) {
            const Complex& z = sys.vector(i)[x];
            os << (x ? ", " : "") << "[" << fmt17(z.real()) << ", " << fmt17(z.imag()) << "]";
        }
        os << "]" << (i + 1 < sys.n() ? "," : "") << "\n";
    }
    os << "  ]";
    if (!sys.labels().empty()) {
        os << ",\n  \"labels\": [";
        for (std::size_t i = 0; i < sys.labels().size(); ++i)
            os << (i ? ", " : "") << quote(sys.labels()[i]);
        os << "]";
    }
    os << "\n}\n";
    return os.str();
}

UnitVectorSystem system_from_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("mvs-1: document must be an object");
    if (field(j, "format_version") != "mvs-1") throw ParseError("mvs-1: unexpected format_version");
    const int d = field(j, "d").get<int>();
    const int n = field(j, "n").get<int>();
    const json& vecs = field(j, "vectors");
    if (!vecs.is_array() || static_cast<int>(vecs.size()) != n)
        throw ParseError("mvs-1: n does not match vectors length");
    std::vector<CVector> vectors;
    vectors.reserve(n);
    for (const json& row : vecs) {
        if (!row.is_array() || static_cast<int>(row.size()) != d)
            throw ParseError("mvs-1: vector row of wrong length");
        std::vector<Complex> v(d);
        for (int x = 0; x < d; ++x) {
            const json& pair = row[x];
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("mvs-1: entries must be [re, im] pairs");
            v[x] = Complex(pair[0].get<double>(), pair[1].get<double>());
        }
        vectors.push_back(CVector(std::move(v)));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        const json& ls = j["labels"];
        if (!ls.is_array() || static_cast<int>(ls.size()) != n)
            throw ParseError("mvs-1: labels length mismatch");
        for (const json& l : ls) labels.push_back(l.get<std::string>());
    }
    return UnitVectorSystem(d, std::move(vectors), std::move(labels));
}

void write_system(const UnitVectorSystem& sys, const std::string& path) {
    spill(path, system_to_json(sys));
}

UnitVectorSystem read_system(const std::string& path) {
    return system_from_json(slurp(path));
}

// -------------------------------- cert-1 -------------------------------------

std::string certificate_to_json(const RigidityCertificate& cert) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"format_version\": \"cert-1\",\n";
    os << "  \"d\": " << cert.d << ",\n";
    os << "  \"n\": " << cert.n << ",\n";
    os << "  \"tol\": " << fmt17(cert.tol) << ",\n";
    os << "  \"verdict\": " << quote(to_string(cert.verdict)) << ",\n";
    os << "  \"failure_stage\": "
       << (cert.failure_stage ? quote(*cert.failure_stage) : "null") << ",\n";
    os << "  \"classification_summary\": {\"orthogonal\": " << cert.classification_summary.orthogonal
       << ", \"unbiased\": " << cert.classification_summary.unbiased
       << ", \"violation\": " << cert.classification_summary.violation << "},\n";
    if (cert.gram) {
        const GramReport& g = *cert.gram;
        os << "  \"gram\": {\n";
        os << "    \"trace_K\": " << fmt17(g.trace_K) << ",\n";
        os << "    \"trace_K2\": " << fmt17(g.trace_K2) << ",\n";
        os << "    \"rank_K\": " << g.rank_K << ",\n";
        os << "    \"trace_Kt\": " << fmt17(g.trace_Kt) << ",\n";
        os << "    \"trace_Kt2\": " << fmt17(g.trace_Kt2) << ",\n";
        os << "    \"rank_Kt\": " << g.rank_Kt << ",\n";
        os << "    \"Kt_projection_residual\": " << fmt17(g.Kt_projection_residual) << ",\n";
        os << "    \"edge_upper_bound\": " << g.edge_upper_bound << ",\n";
        os << "    \"edge_lower_bound\": " << g.edge_lower_bound << "\n";
        os << "  },\n";
    } else {
        os << "  \"gram\": null,\n";
    }
    os << "  \"edge_count\": " << cert.edge_count << ",\n";
    os << "  \"regular_degree\": ";
    if (cert.regular_degree) {
        os << *cert.regular_degree;
    } else {
        os << "null";
    }
    os << ",\n";
    os << "  \"sum_A_entries\": " << cert.sum_A_entries << ",\n";
    os << "  \"spectrum\": [";
    for (std::size_t i = 0; i < cert.spectrum.size(); ++i) {
        os << (i ? ", " : "") << "[" << fmt17(cert.spectrum[i].first) << ", "
           << cert.spectrum[i].second << "]";
    }
    os << "],\n";
    os << "  \"ordered_triangles\": " << cert.ordered_triangles << ",\n";
    if (cert.partition) {
        os << "  \"partition\": [";
        for (std::size_t p = 0; p < cert.partition->size(); ++p) {
            os << (p ? ", " : "") << "[";
            const auto& part = (*cert.partition)[p];
            for (std::size_t i = 0; i < part.size(); ++i) os << (i ? ", " : "") << part[i];
            os << "]";
        }
        os << "],\n";
    } else {
        os << "  \"partition\": null,\n";
    }
    os << "  \"stages\": [\n";
    for (std::size_t i = 0; i < cert.stages.size(); ++i) {
        const StageRecord& s = cert.stages[i];
        os << "    {\"name\": " << quote(s.name) << ", \"passed\": "
           << (s.passed ? "true" : "false") << ", \"detail\": " << quote(s.detail) << "}"
           << (i + 1 < cert.stages.size() ? "," : "") << "\n";
    }
    os << "  ]\n";
    os << "}\n";
    return os.str();
}

RigidityCertificate certificate_from_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("cert-1: document must be an object");
    if (field(j, "format_version") != "cert-1") throw ParseError("cert-1: unexpected format_version");
    RigidityCertificate cert;
    cert.d = field(j, "d").get<int>();
    cert.n = field(j, "n").get<int>();
    cert.tol = field(j, "tol").get<double>();
    const std::string verdict = field(j, "verdict").get<std::string>();
    if (verdict == "CompleteMub") {
        cert.verdict = Verdict::CompleteMub;
    } else if (verdict == "NotApplicable") {
        cert.verdict = Verdict::NotApplicable;
    } else if (verdict == "Contradiction") {
        cert.verdict = Verdict::Contradiction;
    } else {
        throw ParseError("cert-1: unknown verdict");
    }
    if (!field(j, "failure_stage").is_null())
        cert.failure_stage = field(j, "failure_stage").get<std::string>();
    const json& cs = field(j, "classification_summary");
    cert.classification_summary = {field(cs, "orthogonal").get<long long>(),
                                   field(cs, "unbiased").get<long long>(),
                                   field(cs, "violation").get<long long>()};
    if (!field(j, "gram").is_null()) {
        const json& g = j["gram"];
        GramReport rep;
        rep.trace_K = field(g, "trace_K").get<double>();
        rep.trace_K2 = field(g, "trace_K2").get<double>();
        rep.rank_K = field(g, "rank_K").get<int>();
        rep.trace_Kt = field(g, "trace_Kt").get<double>();
        rep.trace_Kt2 = field(g, "trace_Kt2").get<double>();
        rep.rank_Kt = field(g, "rank_Kt").get<int>();
        rep.Kt_projection_residual = field(g, "Kt_projection_residual").get<double>();
        rep.edge_upper_bound = field(g, "edge_upper_bound").get<long long>();
        rep.edge_lower_bound = field(g, "edge_lower_bound").get<long long>();
        cert.gram = rep;
    }
    cert.edge_count = field(j, "edge_count").get<long long>();
    if (!field(j, "regular_degree").is_null())
        cert.regular_degree = j["regular_degree"].get<int>();
    cert.sum_A_entries = field(j, "sum_A_entries").get<long long>();
    for (const json& pair : field(j, "spectrum")) {
        if (!pair.is_array() || pair.size() != 2) throw ParseError("cert-1: bad spectrum entry");
        cert.spectrum.emplace_back(pair[0].get<double>(), pair[1].get<int>());
    }
    cert.ordered_triangles = field(j, "ordered_triangles").get<long long>();
    if (!field(j, "partition").is_null()) {
        std::vector<std::vector<int>> parts;
        for (const json& part : j["partition"]) parts.push_back(part.get<std::vector<int>>());
        cert.partition = std::move(parts);
    }
    for (const json& s : field(j, "stages")) {
        cert.stages.push_back({field(s, "name").get<std::string>(),
                               field(s, "passed").get<bool>(),
                               field(s, "detail").get<std::string>()});
    }
    return cert;
}

void write_certificate(const RigidityCertificate& cert, const std::string& path) {
    spill(path, certificate_to_json(cert));
}

RigidityCertificate read_certificate(const std::string& path) {
    return certificate_from_json(slurp(path));
}

}  // namespace mub::io
