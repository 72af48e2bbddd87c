#include "forge/core/digest.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "forge/core/errors.hpp"

namespace forge::digest {

namespace {

std::string to_hex(const unsigned char* md, unsigned int len) {
    static const char* kHex = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(kHex[md[i] >> 4]);
        out.push_back(kHex[md[i] & 0xF]);
    }
    return out;
}

struct Sha256Ctx {
    EVP_MD_CTX* ctx;
    Sha256Ctx() : ctx(EVP_MD_CTX_new()) {
        if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1)
            fail("DigestInit", "EVP_sha256 init failed");
    }
    ~Sha256Ctx() { EVP_MD_CTX_free(ctx); }
    void update(std::string_view bytes) {
        EVP_DigestUpdate(ctx, bytes.data(), bytes.size());
    }
    std::array<unsigned char, 32> finish() {
        std::array<unsigned char, 32> md{};
        unsigned int len = 0;
        EVP_DigestFinal_ex(ctx, md.data(), &len);
        return md;
    }
};

} // namespace

std::string sha256_hex(std::string_view bytes) {
    Sha256Ctx c;
    c.update(bytes);
    auto md = c.finish();
    return to_hex(md.data(), 32);
}

std::string sha256_fields(const std::vector<std::string_view>& fields) {
    Sha256Ctx c;
    for (const auto& f : fields) {
        char len[32];
        int n = std::snprintf(len, sizeof(len), "%zu:", f.size());
        c.update(std::string_view(len, static_cast<std::size_t>(n)));
        c.update(f);
    }
    auto md = c.finish();
    return to_hex(md.data(), 32);
}

std::uint64_t derive_seed(std::uint64_t root, std::string_view name) {
    char buf[32];
    int n = std::snprintf(buf, sizeof(buf), "%llu",
                          static_cast<unsigned long long>(root));
    Sha256Ctx c;
    c.update(std::string_view(buf, static_cast<std::size_t>(n)));
    c.update("/");
    c.update(name);
    auto md = c.finish();
    std::uint64_t seed = 0;
    for (int i = 7; i >= 0; --i) seed = (seed << 8) | md[static_cast<std::size_t>(i)];
    return seed;
}

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("UnresolvedPath", "cannot open " + path);
    Sha256Ctx c;
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0)
        c.update(std::string_view(buf, static_cast<std::size_t>(in.gcount())));
    auto md = c.finish();
    return to_hex(md.data(), 32);
}

} // namespace forge::digest
