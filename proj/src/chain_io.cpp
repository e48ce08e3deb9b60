#include "hestonrnd/chain_io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace hestonrnd::chain_io {

namespace {

[[noreturn]] void fail(const std::string& origin, int line, const std::string& what) {
    throw std::runtime_error(origin + ":" + std::to_string(line) + ": " + what);
}

double parse_number(const std::string& token, const std::string& origin, int line) {
    std::size_t pos = 0;
    double value;
    try {
        value = std::stod(token, &pos);
    } catch (const std::exception&) {
        fail(origin, line, "not a number: '" + token + "'");
    }
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos])))
        ++pos;
    if (pos != token.size()) fail(origin, line, "trailing garbage in '" + token + "'");
    if (!std::isfinite(value)) fail(origin, line, "non-finite value '" + token + "'");
    return value;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        // Trim surrounding whitespace.
        const auto b = field.find_first_not_of(" \t\r");
        const auto e = field.find_last_not_of(" \t\r");
        fields.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
    }
    return fields;
}

}  // namespace

IngestResult parse_chain(std::istream& in, const std::string& origin) {
    IngestResult result;
    auto& chain = result.chain;

    std::optional<double> spot, rate, tau_days;
    double dividend = 0.0, v0 = 0.0;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const auto first = raw.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (raw[first] == '#') {
            const std::string body = raw.substr(first + 1);
            const auto eq = body.find('=');
            if (eq == std::string::npos) continue;  // plain comment
            const std::string key = body.substr(0, eq);
            const std::string val = body.substr(eq + 1);
            if (key == "spot") spot = parse_number(val, origin, line_no);
            else if (key == "rate") rate = parse_number(val, origin, line_no);
            else if (key == "dividend") dividend = parse_number(val, origin, line_no);
            else if (key == "tau_days") tau_days = parse_number(val, origin, line_no);
            else if (key == "v0") v0 = parse_number(val, origin, line_no);
            else fail(origin, line_no, "unknown metadata key '" + key + "'");
            continue;
        }

        const auto fields = split_csv(raw);
        // Allow an optional column-name header before the first data row.
        if (chain.quotes.empty() && !fields.empty() && fields[0] == "strike") continue;
        if (fields.size() != 2 && fields.size() != 3)
            fail(origin, line_no, "expected strike,mid or strike,bid,ask");

        calibration::OptionQuote q{};
        q.strike = parse_number(fields[0], origin, line_no);
        if (fields.size() == 2) {
            q.mid = parse_number(fields[1], origin, line_no);
        } else {
            const double bid = parse_number(fields[1], origin, line_no);
            const double ask = parse_number(fields[2], origin, line_no);
            if (ask < bid) fail(origin, line_no, "ask below bid");
            q.mid = 0.5 * (bid + ask);
        }
        try {
            q.validate();
            if (!chain.quotes.empty() && !(q.strike > chain.quotes.back().strike))
                throw std::invalid_argument("strikes must be strictly increasing");
        } catch (const std::invalid_argument& e) {
            fail(origin, line_no, e.what());
        }
        chain.quotes.push_back(q);
    }

    if (!spot) throw std::runtime_error(origin + ": missing #spot= header");
    if (!rate) throw std::runtime_error(origin + ": missing #rate= header");
    if (!tau_days) throw std::runtime_error(origin + ": missing #tau_days= header");

    chain.ctx = {*spot, *rate, dividend, *tau_days / 365.0};
    chain.v0_hint = v0;
    chain.validate();

    for (std::size_t i : chain.monotonicity_warnings())
        result.warnings.push_back(
            origin + ": mid at strike " + std::to_string(chain.quotes[i].strike) +
            " exceeds the previous quote (non-monotone chain)");
    return result;
}

IngestResult ingest_chain(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open chain file: " + path);
    return parse_chain(in, path);
}

}  // namespace hestonrnd::chain_io
