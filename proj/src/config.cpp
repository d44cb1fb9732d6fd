#include "ouro/config.hpp"

#include <bit>
#include <string>

#include "ouro/errors.hpp"

namespace ouro {

namespace {

bool pow2(std::uint64_t v) { return v != 0 && std::has_single_bit(v); }

} // namespace

void HeapConfig::validate() const {
    if (!pow2(heap_bytes) || !pow2(chunk_bytes) || !pow2(min_page_bytes) ||
        !pow2(max_page_bytes)) {
        throw ConfigError("heap, chunk and page-class sizes must be powers of two");
    }
    if (min_page_bytes > max_page_bytes) {
        throw ConfigError("min_page_bytes exceeds max_page_bytes");
    }
    if (max_page_bytes > chunk_bytes) {
        throw ConfigError("max_page_bytes exceeds chunk_bytes");
    }
    if (chunk_bytes > heap_bytes) {
        throw ConfigError("chunk_bytes exceeds heap_bytes");
    }
    const std::uint64_t chunks = heap_bytes / chunk_bytes;
    if (chunks > (1ull << 24)) {
        throw ConfigError("more than 2^24 chunks; chunk index does not fit a packed handle");
    }
    const int page_bits  = std::countr_zero(chunk_bytes / min_page_bytes);
    const int chunk_bits = 64 - std::countl_zero(chunks - 1 ? chunks - 1 : 0);
    if (page_bits + chunk_bits > 32) {
        throw ConfigError("chunk/page split does not fit a 32-bit handle");
    }
    if (max_retries == 0) {
        throw ConfigError("max_retries must be at least 1");
    }
}

std::string_view variant_name(Variant v) {
    const bool page = v.kind == AllocatorKind::Page;
    switch (v.flavor) {
    case QueueFlavor::Array:        return page ? "page" : "chunk";
    case QueueFlavor::VirtualArray: return page ? "va-page" : "va-chunk";
    case QueueFlavor::VirtualList:  return page ? "vl-page" : "vl-chunk";
    }
    return "?";
}

std::optional<Variant> variant_from_name(std::string_view name) {
    for (Variant v : kAllVariants) {
        if (variant_name(v) == name) return v;
    }
    return std::nullopt;
}

} // namespace ouro
