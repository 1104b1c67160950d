#include "tinsep/network_io.hpp"

#include "tinsep/errors.hpp"

#include <fstream>

namespace tinsep {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what)
{
    throw InputError("malformed network document: " + what);
}

Rational parse_entry(const json& value, const std::string& where)
{
    if (value.is_number_integer()) {
        if (value.is_number_unsigned()) return Rational(Integer(std::to_string(value.get<unsigned long long>())));
        return Rational(Integer(std::to_string(value.get<long long>())));
    }
    if (value.is_number_float()) {
        malformed(where + " is a floating-point number; write non-integers as strings such as \"1/2\"");
    }
    if (value.is_string()) return parse_rational(value.get<std::string>());
    malformed(where + " must be an integer or a rational string");
}

int parse_count(const json& document, const char* key)
{
    if (!document.contains(key)) malformed(std::string("missing \"") + key + "\"");
    const json& v = document.at(key);
    if (!v.is_number_integer()) malformed(std::string("\"") + key + "\" must be an integer");
    return v.get<int>();
}

}  // namespace

NetworkDocument load_network(const json& document)
{
    if (!document.is_object()) malformed("top level must be an object");
    if (!document.contains("mode") || !document.at("mode").is_string()) malformed("missing string \"mode\"");
    Mode mode = parse_mode(document.at("mode").get<std::string>());
    int users = parse_count(document, "users");
    int declared_m = parse_count(document, "subchannels");
    if (users < 1) malformed("\"users\" must be at least 1");
    if (!document.contains("matrices") || !document.at("matrices").is_array()) malformed("missing array \"matrices\"");
    const json& matrices = document.at("matrices");
    if (matrices.empty()) throw InputError("M >= 1 required: \"matrices\" is empty");
    if (static_cast<int>(matrices.size()) != declared_m) {
        malformed("\"subchannels\" is " + std::to_string(declared_m) + " but " + std::to_string(matrices.size())
                  + " matrices are listed");
    }

    std::vector<std::string> warnings;
    std::vector<StrengthMatrix> channels;
    for (std::size_t m = 0; m < matrices.size(); ++m) {
        std::string tag = "sub-channel " + std::to_string(m + 1);
        const json* body = &matrices[m];
        Mode channel_mode = mode;
        if (body->is_object()) {
            if (!body->contains("entries")) malformed(tag + " object needs \"entries\"");
            if (body->contains("mode")) {
                if (!body->at("mode").is_string()) malformed(tag + " \"mode\" must be a string");
                channel_mode = parse_mode(body->at("mode").get<std::string>());
            }
            body = &body->at("entries");
        }
        const json& rows = *body;
        if (!rows.is_array()) malformed(tag + " must be an array of rows");

        const auto k = static_cast<std::size_t>(users);
        const bool flat = !rows.empty() && !rows.front().is_array();
        std::vector<Rational> entries;
        auto take = [&](const json& value, std::size_t r, std::size_t c) {
            std::string where = tag + " entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
            Rational v = parse_entry(value, where);
            if (sgn(v) < 0) warnings.push_back(where + " is negative (" + to_string(v) + "); clamped to 0");
            entries.push_back(std::move(v));
        };
        if (flat) {
            if (rows.size() != k * k) {
                throw InputError("non-square matrix: " + tag + " has " + std::to_string(rows.size())
                                 + " row-major entries, expected " + std::to_string(k * k));
            }
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i].is_array()) malformed(tag + " mixes nested rows and flat entries");
                take(rows[i], i / k, i % k);
            }
        } else {
            if (rows.size() != k) {
                throw InputError("non-square matrix: " + tag + " has " + std::to_string(rows.size()) + " rows, expected "
                                 + std::to_string(users));
            }
            for (std::size_t r = 0; r < k; ++r) {
                const json& row = rows[r];
                if (!row.is_array()) malformed(tag + " row " + std::to_string(r + 1) + " must be an array");
                if (row.size() != k) {
                    throw InputError("non-square matrix: " + tag + " row " + std::to_string(r + 1) + " has "
                                     + std::to_string(row.size()) + " entries, expected " + std::to_string(users));
                }
                for (std::size_t c = 0; c < k; ++c) take(row[c], r, c);
            }
        }
        try {
            channels.emplace_back(users, channel_mode, std::move(entries));
        } catch (const InputError& e) {
            throw InputError(tag + ": " + e.what());
        }
    }

    std::optional<std::string> fixture;
    if (document.contains("fixture")) {
        if (!document.at("fixture").is_string()) malformed("\"fixture\" must be a string");
        fixture = document.at("fixture").get<std::string>();
    }
    return NetworkDocument{ParallelNetwork(std::move(channels)), std::move(warnings), std::move(fixture)};
}

NetworkDocument load_network_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    json document;
    try {
        in >> document;
    } catch (const json::parse_error& e) {
        throw InputError("malformed network document: " + path.string() + ": " + e.what());
    }
    return load_network(document);
}

json save_network(const ParallelNetwork& network, const std::optional<std::string>& fixture)
{
    json doc;
    doc["mode"] = std::string(to_string(network.mode()));
    doc["users"] = network.users();
    doc["subchannels"] = network.subchannels();
    json matrices = json::array();
    for (const auto& ch : network.channels()) {
        json rows = json::array();
        for (int r = 0; r < ch.users(); ++r) {
            json row = json::array();
            for (int c = 0; c < ch.users(); ++c) {
                if (ch.deterministic()) row.push_back(ch.level(r, c));
                else row.push_back(to_string(ch.at(r, c)));
            }
            rows.push_back(std::move(row));
        }
        matrices.push_back(std::move(rows));
    }
    doc["matrices"] = std::move(matrices);
    if (fixture) doc["fixture"] = *fixture;
    return doc;
}

}  // namespace tinsep
