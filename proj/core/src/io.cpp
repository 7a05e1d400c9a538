#include "cuntz/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "cuntz/parse.hpp"

namespace cuntz {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw std::runtime_error(what); }

Word word_from_json(const json& j, int n, const std::string& where) {
    if (!j.is_array()) bad(where + ": a word must be an array of letters");
    std::vector<int> letters;
    for (const auto& v : j) {
        if (!v.is_number_integer()) bad(where + ": letters must be integers");
        int letter = v.get<int>();
        if (letter < 1 || letter > n)
            bad(where + ": letter " + std::to_string(letter) + " out of range 1.." +
                std::to_string(n));
        letters.push_back(letter);
    }
    return Word(std::move(letters));
}

}  // namespace

AlgebraSpec spec_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        bad(std::string("spec is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("blocks"))
        bad("spec must be an object with fields \"n\" and \"blocks\"");
    if (!j["n"].is_number_integer()) bad("\"n\" must be an integer");
    int n = j["n"].get<int>();
    if (n < 2) bad("\"n\" must be at least 2");
    if (!j["blocks"].is_array() || j["blocks"].empty())
        bad("\"blocks\" must be a nonempty array");

    AlgebraSpec spec{Alphabet(n), {}};
    std::size_t bi = 0;
    for (const auto& block : j["blocks"]) {
        ++bi;
        const std::string where = "block " + std::to_string(bi);
        if (!block.is_array()) bad(where + " must be an array of words");
        std::vector<Word> words;
        for (const auto& w : block) words.push_back(word_from_json(w, n, where));
        spec.blocks.push_back(std::move(words));
    }
    return spec;
}

std::string spec_to_json(const AlgebraSpec& spec) {
    json blocks = json::array();
    for (const auto& block : spec.blocks) {
        json jb = json::array();
        for (const Word& w : block) jb.push_back(w.letters());
        blocks.push_back(std::move(jb));
    }
    json j{{"n", spec.alphabet.size()}, {"blocks", std::move(blocks)}};
    return j.dump();
}

AlgebraSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open spec file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return spec_from_json(buffer.str());
}

PermSpec parse_perm(const std::string& text, std::size_t k) {
    std::vector<long> images(k, -1);
    std::istringstream in(text);
    std::string pair;
    std::size_t seen = 0;
    while (std::getline(in, pair, ',')) {
        std::istringstream ps(pair);
        long from = 0, to = 0;
        char colon = '\0';
        if (!(ps >> from >> colon >> to) || colon != ':' || (ps >> std::ws, !ps.eof()))
            bad("malformed permutation entry \"" + pair + "\"; expected \"j:h\"");
        if (from < 1 || static_cast<std::size_t>(from) > k)
            bad("permutation maps unknown block " + std::to_string(from));
        if (to < 1 || static_cast<std::size_t>(to) > k)
            bad("permutation image " + std::to_string(to) + " out of range 1.." +
                std::to_string(k));
        if (images[static_cast<std::size_t>(from) - 1] != -1)
            bad("block " + std::to_string(from) + " mapped twice");
        images[static_cast<std::size_t>(from) - 1] = to - 1;
        ++seen;
    }
    if (seen != k) bad("permutation must map every block 1.." + std::to_string(k));
    PermSpec sigma;
    for (long v : images) sigma.images.push_back(static_cast<std::size_t>(v));
    if (!sigma.is_bijection()) bad("permutation images repeat");
    return sigma;
}

std::string format_perm(const PermSpec& sigma) {
    std::string out;
    for (std::size_t j = 0; j < sigma.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(j + 1) + ":" + std::to_string(sigma.apply(j) + 1);
    }
    return out;
}

std::string unitary_to_json(const NormalizerUnitary& u) {
    json sigma = json::array();
    for (std::size_t j = 0; j < u.sigma.size(); ++j) sigma.push_back(u.sigma.apply(j) + 1);
    json j{{"sigma", std::move(sigma)},
           {"element", render_element(u.element)},
           {"block_exponents", u.block_exponents}};
    return j.dump();
}

NormalizerUnitary unitary_from_json(const std::string& text, Alphabet alphabet) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        bad(std::string("unitary is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("sigma") || !j.contains("element") ||
        !j.contains("block_exponents"))
        bad("unitary must be an object with \"sigma\", \"element\", \"block_exponents\"");
    if (!j["sigma"].is_array() || !j["block_exponents"].is_array())
        bad("\"sigma\" and \"block_exponents\" must be arrays");
    if (!j["element"].is_string()) bad("\"element\" must be a string");

    NormalizerUnitary out{PermSpec{}, Element(alphabet), {}};
    const std::size_t k = j["sigma"].size();
    for (const auto& v : j["sigma"]) {
        if (!v.is_number_integer()) bad("\"sigma\" entries must be integers");
        long image = v.get<long>();
        if (image < 1 || static_cast<std::size_t>(image) > k)
            bad("\"sigma\" entry " + std::to_string(image) + " out of range");
        out.sigma.images.push_back(static_cast<std::size_t>(image) - 1);
    }
    if (!out.sigma.is_bijection()) bad("\"sigma\" is not a permutation");
    for (const auto& v : j["block_exponents"]) {
        if (!v.is_number_integer()) bad("\"block_exponents\" entries must be integers");
        out.block_exponents.push_back(v.get<int>());
    }
    if (out.block_exponents.size() != k)
        bad("\"block_exponents\" must have one entry per block");
    try {
        out.element = parse_element(j["element"].get<std::string>(), alphabet.size()).element;
    } catch (const ParseError& e) {
        bad(std::string("\"element\" does not parse: ") + e.what());
    }
    return out;
}

}  // namespace cuntz
