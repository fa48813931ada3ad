// Trailing-edge rate limiter for knob updates: at most one call per
// interval, and the final value always goes out.

export function rateLimit<T>(fn: (value: T) => void, intervalMs: number,
                             now: () => number = () => performance.now(),
                             schedule: (cb: () => void, ms: number) => unknown = setTimeout) {
    let lastSent = -Infinity
    let pending: { value: T } | null = null
    let scheduled = false

    const flush = () => {
        scheduled = false
        if (pending) {
            const { value } = pending
            pending = null
            lastSent = now()
            fn(value)
        }
    }

    return (value: T) => {
        const wait = lastSent + intervalMs - now()
        if (wait <= 0) {
            lastSent = now()
            fn(value)
            return
        }
        pending = { value }
        if (!scheduled) {
            scheduled = true
            schedule(flush, wait)
        }
    }
}
