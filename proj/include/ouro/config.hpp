#ifndef OURO_CONFIG_HPP
#define OURO_CONFIG_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace ouro {

// Storage backing an index queue.
//   Array        - one flat slot array, reserved eagerly.
//   VirtualArray - directory of segments; segments are arena chunks
//                  acquired on demand and returned when drained.
//   VirtualList  - linked segments; the queue holds only head/tail
//                  segment references.
enum class QueueFlavor : std::uint8_t { Array, VirtualArray, VirtualList };

// Page: per-class queues of page handles over a static heap partition.
// Chunk: shared chunk pool plus per-class queues of chunks with free pages.
enum class AllocatorKind : std::uint8_t { Page, Chunk };

// What a thread does between failed acquisition rounds.
enum class BackoffPolicy : std::uint8_t { FenceRetry, SleepRetry };

struct HeapConfig {
    std::uint64_t heap_bytes     = 64ull << 20;
    std::uint64_t chunk_bytes    = 64ull << 10;
    std::uint64_t min_page_bytes = 16;
    std::uint64_t max_page_bytes = 8192;

    QueueFlavor   queue_flavor   = QueueFlavor::Array;
    AllocatorKind allocator_kind = AllocatorKind::Page;
    BackoffPolicy backoff        = BackoffPolicy::FenceRetry;

    std::uint32_t max_retries    = 64;
    std::uint32_t sleep_base_ns  = 100;
    std::uint32_t sleep_cap_ns   = 100'000;

    // Throws ConfigError if any geometry invariant fails:
    // all four sizes powers of two, min <= max <= chunk <= heap,
    // heap/chunk <= 2^24, and the (chunk, page) split fits 32 bits.
    void validate() const;

    std::uint32_t num_chunks() const {
        return static_cast<std::uint32_t>(heap_bytes / chunk_bytes);
    }
    // Pages of the smallest class in one chunk; fixes the handle bit split.
    std::uint32_t max_pages_per_chunk() const {
        return static_cast<std::uint32_t>(chunk_bytes / min_page_bytes);
    }
};

// One of the six benchmarked allocator variants.
struct Variant {
    AllocatorKind kind;
    QueueFlavor   flavor;

    bool operator==(const Variant&) const = default;
};

inline constexpr std::array<Variant, 6> kAllVariants = {{
    {AllocatorKind::Page, QueueFlavor::Array},
    {AllocatorKind::Chunk, QueueFlavor::Array},
    {AllocatorKind::Page, QueueFlavor::VirtualArray},
    {AllocatorKind::Chunk, QueueFlavor::VirtualArray},
    {AllocatorKind::Page, QueueFlavor::VirtualList},
    {AllocatorKind::Chunk, QueueFlavor::VirtualList},
}};

// "page", "chunk", "va-page", "va-chunk", "vl-page", "vl-chunk"
std::string_view variant_name(Variant v);
std::optional<Variant> variant_from_name(std::string_view name);

} // namespace ouro

#endif // OURO_CONFIG_HPP
