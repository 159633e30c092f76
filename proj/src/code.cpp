#include "dnacode/code.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace dnacode {

std::string to_string(ConstraintKind kind) {
    switch (kind) {
        case ConstraintKind::GC: return "gc";
        case ConstraintKind::GC_RC: return "gcrc";
        case ConstraintKind::GC_R: return "gcr";
    }
    return "?";
}

std::optional<ConstraintKind> constraint_from_string(std::string_view text) {
    if (text == "gc") return ConstraintKind::GC;
    if (text == "gcrc") return ConstraintKind::GC_RC;
    if (text == "gcr") return ConstraintKind::GC_R;
    return std::nullopt;
}

void CodeParams::validate() const {
    if (n < 1 || n > kMaxWordLength)
        throw std::invalid_argument("n must be in [1,32]");
    if (d < 1 || d > n)
        throw std::invalid_argument("d must be in [1,n]");
    if (w < 0 || w > n)
        throw std::invalid_argument("w must be in [0,n]");
}

std::optional<DnaWord> constraint_image(const DnaWord& x, ConstraintKind kind) {
    switch (kind) {
        case ConstraintKind::GC: return std::nullopt;
        case ConstraintKind::GC_RC: return reverse_complement(x);
        case ConstraintKind::GC_R: return reverse_word(x);
    }
    return std::nullopt;
}

void write_code(std::ostream& out, const Code& code) {
    out << "# n=" << code.params.n << " d=" << code.params.d << " w=" << code.params.w
        << " constraint=" << to_string(code.params.kind);
    if (code.spec) {
        if (const auto* s = std::get_if<SingleOffset>(&*code.spec)) {
            out << " ordering=" << s->ordering.index << " offset=" << offset_to_string(*code.spec);
        } else {
            out << " ordering=- offset=" << offset_to_string(*code.spec);
        }
    } else {
        out << " ordering=- offset=-";
    }
    out << "\n";
    for (const auto& w : code.words) out << w.str() << "\n";
}

Code read_code(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || !line.starts_with("#"))
        throw std::invalid_argument("code file must start with a '# key=value ...' header");

    std::map<std::string, std::string> kv;
    std::istringstream header(line.substr(1));
    std::string token;
    while (header >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos) continue;
        kv[token.substr(0, eq)] = token.substr(eq + 1);
    }
    for (const char* key : {"n", "d", "w", "constraint"})
        if (!kv.count(key))
            throw std::invalid_argument(std::string("code file header missing ") + key);

    Code code;
    code.params.n = std::stoi(kv.at("n"));
    code.params.d = std::stoi(kv.at("d"));
    code.params.w = std::stoi(kv.at("w"));
    auto kind = constraint_from_string(kv.at("constraint"));
    if (!kind) throw std::invalid_argument("unknown constraint kind: " + kv.at("constraint"));
    code.params.kind = *kind;
    code.params.validate();

    std::string off = kv.count("offset") ? kv.at("offset") : "-";
    std::string ord = kv.count("ordering") ? kv.at("ordering") : "-";
    if (off != "-") {
        std::optional<int> ord_idx;
        if (ord != "-") ord_idx = std::stoi(ord);
        code.spec = parse_offset(off, ord_idx);
    }

    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        code.words.push_back(DnaWord::parse(line));
        if (code.words.back().length() != code.params.n)
            throw std::invalid_argument("word length disagrees with header: " + line);
    }
    return code;
}

void write_code_file(const std::string& path, const Code& code) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_code(out, code);
}

Code read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return read_code(in);
}

}  // namespace dnacode
