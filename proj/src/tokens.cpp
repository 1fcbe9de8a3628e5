#include "cliquelab/tokens.hpp"

#include <fstream>
#include <sstream>

#include "cliquelab/util.hpp"

namespace cliquelab {

int32_t Vocab::intern(std::string_view name) {
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return it->second;
    int32_t id = int32_t(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
}

int32_t Vocab::find(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    return it == ids_.end() ? -1 : it->second;
}

TokenSeq make_token_seq(VocabPtr vocab, const std::vector<std::string>& names) {
    if (!vocab) vocab = std::make_shared<Vocab>();
    TokenSeq seq{std::move(vocab), {}};
    seq.ids.reserve(names.size());
    for (const auto& n : names) seq.push(n);
    return seq;
}

TokenSeq parse_token_text(const std::string& text, VocabPtr vocab) {
    if (!vocab) vocab = std::make_shared<Vocab>();
    TokenSeq seq{std::move(vocab), {}};
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) seq.push(tok);
    return seq;
}

std::string token_text(const TokenSeq& seq) {
    std::string out;
    for (size_t i = 0; i < seq.ids.size(); ++i) {
        out += seq.name_at(i);
        out += (i + 1) % 64 == 0 ? '\n' : ' ';
    }
    if (!out.empty() && out.back() == ' ') out.back() = '\n';
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot write file: " + path);
    out << content;
}

}  // namespace cliquelab
