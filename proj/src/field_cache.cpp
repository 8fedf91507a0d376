#include "tracecode/field_cache.hpp"

#include <array>
#include <bit>
#include <fstream>
#include <system_error>

#include "tracecode/error.hpp"

namespace tracecode {

namespace {

constexpr std::array<char, 4> kMagic = {'T', 'C', 'L', '1'};

void put_u64(std::ostream& os, std::uint64_t v) {
    std::array<char, 8> b{};
    for (int i = 0; i < 8; ++i)
        b[static_cast<std::size_t>(i)] = static_cast<char>((v >> (8 * i)) & 0xFF);
    os.write(b.data(), b.size());
}

bool get_u64(std::istream& is, std::uint64_t& v) {
    std::array<unsigned char, 8> b{};
    if (!is.read(reinterpret_cast<char*>(b.data()), b.size()))
        return false;
    v = 0;
    for (int i = 7; i >= 0; --i)
        v = (v << 8) | b[static_cast<std::size_t>(i)];
    return true;
}

bool get_coeffs(std::istream& is, std::size_t count, std::uint64_t p, std::vector<std::uint32_t>& out) {
    out.resize(count);
    for (auto& c : out) {
        std::uint64_t v = 0;
        if (!get_u64(is, v) || v >= p)
            return false;
        c = static_cast<std::uint32_t>(v);
    }
    return true;
}

} // namespace

std::filesystem::path field_cache_path(const std::filesystem::path& dir, const FieldParams& fp) {
    return dir / ("field_p" + std::to_string(fp.p) + "_l" + std::to_string(fp.ell) + "_m" + std::to_string(fp.m) +
                  ".tcl");
}

std::optional<CachedField> load_field_cache(const std::filesystem::path& file, const FieldParams& fp) {
    std::ifstream is(file, std::ios::binary);
    if (!is)
        return std::nullopt;
    std::array<char, 4> magic{};
    if (!is.read(magic.data(), magic.size()) || magic != kMagic)
        return std::nullopt;
    std::uint64_t p = 0, ell = 0, m = 0, q = 0;
    if (!get_u64(is, p) || !get_u64(is, ell) || !get_u64(is, m) || !get_u64(is, q))
        return std::nullopt;
    if (p != static_cast<std::uint64_t>(fp.p) || ell != static_cast<std::uint64_t>(fp.ell) ||
        m != static_cast<std::uint64_t>(fp.m) || q != static_cast<std::uint64_t>(fp.q))
        return std::nullopt;
    const auto e = static_cast<std::size_t>(fp.e);
    CachedField c;
    if (!get_coeffs(is, e, p, c.modulus) || !get_coeffs(is, e, p, c.g))
        return std::nullopt;
    std::uint64_t count = 0;
    if (!get_u64(is, count) || (count != 0 && count != q - 1))
        return std::nullopt;
    c.log_table.resize(count);
    for (auto& t : c.log_table) {
        if (!get_u64(is, t) || t >= q - 1)
            return std::nullopt;
    }
    return c;
}

void save_field_cache(const std::filesystem::path& file, const FieldParams& fp, const CachedField& data) {
    std::error_code ec;
    if (file.has_parent_path())
        std::filesystem::create_directories(file.parent_path(), ec);
    if (ec)
        throw Error(Errc::io, "cannot create cache directory " + file.parent_path().string() + ": " + ec.message());
    auto tmp = file;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os)
            throw Error(Errc::io, "cannot write cache file " + tmp.string());
        os.write(kMagic.data(), kMagic.size());
        for (auto v : {fp.p, fp.ell, fp.m, fp.q})
            put_u64(os, static_cast<std::uint64_t>(v));
        for (auto c : data.modulus)
            put_u64(os, c);
        for (auto c : data.g)
            put_u64(os, c);
        put_u64(os, data.log_table.size());
        for (auto t : data.log_table)
            put_u64(os, t);
        if (!os)
            throw Error(Errc::io, "cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, file, ec);
    if (ec)
        throw Error(Errc::io, "cannot rename " + tmp.string() + " to " + file.string() + ": " + ec.message());
}

FieldCtx build_field(const FieldParams& fp, const std::optional<std::filesystem::path>& dir) {
    if (!dir)
        return FieldCtx::build(fp);
    const auto file = field_cache_path(*dir, fp);
    FieldOptions options;
    options.cached = load_field_cache(file, fp);
    auto ctx = FieldCtx::build(fp, options);
    const auto fresh = ctx.to_cache();
    const bool stale = !options.cached || options.cached->modulus != fresh.modulus || options.cached->g != fresh.g ||
                       options.cached->log_table.size() != fresh.log_table.size();
    if (stale)
        save_field_cache(file, fp, fresh);
    return ctx;
}

} // namespace tracecode
