#include <gclose/report.hpp>

#include <charconv>
#include <sstream>

#include <json.hpp>

namespace gclose {

namespace {

std::string number(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return {buf, res.ptr};
}

template <class T, class Fmt>
std::string joined(const std::vector<T> &xs, Fmt fmt) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ' ';
        out += fmt(xs[i]);
    }
    return out;
}

} // namespace

std::string to_json(const RunReport &r) {
    nlohmann::ordered_json j;
    j["algorithm"] = r.algorithm;
    j["params"] = {
        {"k", r.k},
        {"variant", r.variant},
        {"h", r.h ? nlohmann::ordered_json(*r.h) : nlohmann::ordered_json(nullptr)},
        {"p", r.p ? nlohmann::ordered_json(*r.p) : nlohmann::ordered_json(nullptr)},
        {"samples", r.samples},
        {"width", r.width},
        {"max_exchanges", r.max_exchanges},
        {"seed", r.seed},
    };
    j["graph"] = {{"n", r.n}, {"m", r.m}, {"weighted", r.weighted}};
    j["group"] = r.group;
    j["farness"] = r.farness;
    j["closeness"] = r.closeness;
    j["exchanges"] = r.exchanges;
    j["trace"] = r.trace;
    j["duration_ms"] = r.duration_ms;
    return j.dump(2) + "\n";
}

std::string to_csv(const RunReport &r) {
    std::ostringstream out;
    out << "algorithm,k,variant,h,p,samples,width,max_exchanges,seed,n,m,weighted,"
           "group,farness,closeness,exchanges,trace,duration_ms\n";
    out << r.algorithm << ',' << r.k << ',' << r.variant << ','
        << (r.h ? std::to_string(*r.h) : "") << ',' << (r.p ? number(*r.p) : "") << ','
        << r.samples << ',' << r.width << ',' << r.max_exchanges << ',' << r.seed << ',' << r.n
        << ',' << r.m << ',' << (r.weighted ? "true" : "false") << ','
        << joined(r.group, [](Vertex v) { return std::to_string(v); }) << ','
        << number(r.farness) << ',' << number(r.closeness) << ',' << r.exchanges << ','
        << joined(r.trace, number) << ',' << number(r.duration_ms) << '\n';
    return out.str();
}

} // namespace gclose
