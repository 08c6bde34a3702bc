#include "qspin/io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "qspin/error.hpp"

namespace qspin {

std::optional<output_format> parse_output_format(std::string_view name) noexcept
{
    if (name == "text")
        return output_format::text;
    if (name == "json")
        return output_format::json;
    if (name == "csv")
        return output_format::csv;
    return std::nullopt;
}

json coeff_to_json(const sym_coeff& x)
{
    json out = json::array();
    for (const auto& [m, c] : x.terms()) {
        json exps = json::object();
        for (auto s : all_symbols)
            if (m[s] != 0)
                exps[std::string(symbol_name(s))] = m[s];
        out.push_back({{"m", std::move(exps)}, {"c", c.get_str()}});
    }
    return out;
}

sym_coeff coeff_from_json(const json& j)
{
    if (!j.is_array())
        throw error(errc::invalid_argument, "coefficient JSON must be an array");
    std::vector<sym_coeff::term> terms;
    for (const auto& t : j) {
        monomial m;
        for (const auto& [name, e] : t.at("m").items()) {
            auto s = parse_symbol(name);
            if (!s)
                throw error(errc::invalid_argument, "unknown symbol '" + name + "'");
            m.exponents[static_cast<std::size_t>(*s)] = e.get<std::int32_t>();
        }
        mpz_class c;
        if (c.set_str(t.at("c").get<std::string>(), 10) != 0)
            throw error(errc::invalid_argument, "malformed integer in coefficient JSON");
        terms.emplace_back(m, std::move(c));
    }
    return sym_coeff::from_terms(std::move(terms));
}

json series_to_json(const qseries& s)
{
    json terms = json::array();
    for (int k = 0; k <= s.order(); ++k)
        if (!s.coeff(k).is_zero())
            terms.push_back({{"q", k}, {"coeff", coeff_to_json(s.coeff(k))}});
    return {{"order", s.order()}, {"terms", std::move(terms)}};
}

qseries series_from_json(const json& j)
{
    qseries s(j.at("order").get<int>());
    for (const auto& t : j.at("terms"))
        s.add_to_coeff(t.at("q").get<int>(), coeff_from_json(t.at("coeff")));
    return s;
}

std::string series_to_csv(const qseries& s)
{
    std::string out = "k,coeff\n";
    for (int k = 0; k <= s.order(); ++k) {
        const auto v = s.coeff(k).as_integer();
        if (!v)
            throw error(errc::invalid_argument,
                        "CSV output needs a symbol-free series; q^" + std::to_string(k) +
                            " has coefficient " + to_string(s.coeff(k)));
        out += std::to_string(k) + ',' + v->get_str() + '\n';
    }
    return out;
}

std::string series_to_text(const qseries& s)
{
    std::string out = "order " + std::to_string(s.order()) + '\n';
    for (int k = 0; k <= s.order(); ++k)
        if (!s.coeff(k).is_zero())
            out += "q^" + std::to_string(k) + ": " + to_string(s.coeff(k)) + '\n';
    return out;
}

json report_to_json(const verification_report& r)
{
    json mm = nullptr;
    if (r.first_mismatch)
        mm = {{"q", r.first_mismatch->q},
              {"lhs", coeff_to_json(r.first_mismatch->lhs)},
              {"rhs", coeff_to_json(r.first_mismatch->rhs)}};
    return {{"id", r.id},
            {"order", r.order},
            {"outcome", r.result == outcome::pass ? "pass" : "fail"},
            {"first_mismatch", std::move(mm)},
            {"elapsed_ms", r.elapsed.count()}};
}

std::string report_to_text(const verification_report& r)
{
    std::string out = r.id + " order " + std::to_string(r.order) + ": " +
                      (r.result == outcome::pass ? "pass" : "FAIL");
    if (r.first_mismatch)
        out += " (first mismatch at q^" + std::to_string(r.first_mismatch->q) +
               ": lhs " + to_string(r.first_mismatch->lhs) + ", rhs " +
               to_string(r.first_mismatch->rhs) + ")";
    return out;
}

json table_to_json(const table_report& t)
{
    json d = json::array(), a = json::array();
    for (const auto& r : t.d_rows)
        d.push_back({{"pi", to_string(r.pi)}, {"t", r.chain}, {"w1", r.w1}, {"w2", r.w2}});
    for (const auto& r : t.a_rows)
        a.push_back({{"pi", to_string(r.pi)},
                     {"t", r.chain},
                     {"p2", r.p2},
                     {"r2", r.r2},
                     {"what1", r.what1},
                     {"r1", r.r1},
                     {"what2", r.what2}});
    return {{"n", t.n},
            {"d_rows", std::move(d)},
            {"a_rows", std::move(a)},
            {"totals",
             {{"w1", t.total_w1}, {"w2", t.total_w2}, {"what1", t.total_what1}, {"what2", t.total_what2}}}};
}

std::string table_to_text(const table_report& t)
{
    std::size_t dw = 7, aw = 7; // width of "pi in D"
    for (const auto& r : t.d_rows)
        dw = std::max(dw, to_string(r.pi).size());
    for (const auto& r : t.a_rows)
        aw = std::max(aw, to_string(r.pi).size());

    std::ostringstream os;
    auto left = [&](const std::string& pi, const std::string& tt, const std::string& w1,
                    const std::string& w2) {
        os << std::left << std::setw(static_cast<int>(dw)) << pi << std::right << std::setw(4) << tt
           << std::setw(6) << w1 << std::setw(6) << w2 << " || ";
    };
    auto right = [&](const std::string& pi, const std::string& tt, const std::string& p2,
                     const std::string& r2, const std::string& h1, const std::string& r1,
                     const std::string& h2) {
        os << std::left << std::setw(static_cast<int>(aw)) << pi << std::right << std::setw(4) << tt
           << std::setw(5) << p2 << std::setw(5) << r2 << std::setw(8) << h1 << std::setw(5) << r1
           << std::setw(8) << h2 << '\n';
    };

    left("pi in D", "t", "w_1", "w_2");
    right("pi in A", "t", "p_2", "r_2", "what_1", "r_1", "what_2");
    os << std::string(dw + 16, '-') << "-||-" << std::string(aw + 35, '-') << '\n';
    const std::size_t rows = std::max(t.d_rows.size(), t.a_rows.size());
    for (std::size_t i = 0; i < rows; ++i) {
        if (i < t.d_rows.size()) {
            const auto& r = t.d_rows[i];
            left(to_string(r.pi), std::to_string(r.chain), std::to_string(r.w1), std::to_string(r.w2));
        } else {
            left("", "", "", "");
        }
        if (i < t.a_rows.size()) {
            const auto& r = t.a_rows[i];
            right(to_string(r.pi), std::to_string(r.chain), std::to_string(r.p2),
                  std::to_string(r.r2), std::to_string(r.what1), std::to_string(r.r1),
                  std::to_string(r.what2));
        } else {
            os << '\n';
        }
    }
    os << std::string(dw + 16, '-') << "-||-" << std::string(aw + 35, '-') << '\n';
    left("Total:", "", std::to_string(t.total_w1), std::to_string(t.total_w2));
    right("", "", "", "", std::to_string(t.total_what1), "", std::to_string(t.total_what2));
    return os.str();
}

std::string table_to_csv(const table_report& t)
{
    std::ostringstream os;
    os << "set,pi,t,p2,r2,r1,w1,w2\n";
    for (const auto& r : t.d_rows)
        os << "D,\"" << to_string(r.pi) << "\"," << r.chain << ",,,," << r.w1 << ',' << r.w2 << '\n';
    for (const auto& r : t.a_rows)
        os << "A,\"" << to_string(r.pi) << "\"," << r.chain << ',' << r.p2 << ',' << r.r2 << ','
           << r.r1 << ',' << r.what1 << ',' << r.what2 << '\n';
    os << "D,Total,,,,," << t.total_w1 << ',' << t.total_w2 << '\n';
    os << "A,Total,,,,," << t.total_what1 << ',' << t.total_what2 << '\n';
    return os.str();
}

std::string render_partitions(const std::vector<partition>& ps, output_format f)
{
    std::ostringstream os;
    switch (f) {
    case output_format::json: {
        json out = json::array();
        for (const auto& p : ps) {
            const auto s = stats(p, 2);
            out.push_back({{"pi", to_string(p)},
                           {"freqs", p.freqs()},
                           {"size", s.size},
                           {"parts", s.parts},
                           {"t", s.chain},
                           {"p1", s.p[0]},
                           {"p2", s.p[1]},
                           {"r1", s.r[0]},
                           {"r2", s.r[1]}});
        }
        os << out.dump(2) << '\n';
        break;
    }
    case output_format::csv:
        os << "pi,size,parts,t,p1,p2,r1,r2\n";
        for (const auto& p : ps) {
            const auto s = stats(p, 2);
            os << '"' << to_string(p) << "\"," << s.size << ',' << s.parts << ',' << s.chain << ','
               << s.p[0] << ',' << s.p[1] << ',' << s.r[0] << ',' << s.r[1] << '\n';
        }
        break;
    case output_format::text:
        for (const auto& p : ps) {
            const auto s = stats(p, 2);
            os << to_string(p) << "  size=" << s.size << " parts=" << s.parts << " t=" << s.chain
               << " p1=" << s.p[0] << " p2=" << s.p[1] << " r1=" << s.r[0] << " r2=" << s.r[1]
               << '\n';
        }
        break;
    }
    return os.str();
}

} // namespace qspin
