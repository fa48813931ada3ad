import { describe, expect, it } from 'vitest'

import { rateLimit } from '../src/debounce'

function fakeClock() {
    let t = 0
    const timers: Array<{ at: number; cb: () => void }> = []
    return {
        now: () => t,
        schedule: (cb: () => void, ms: number) => timers.push({ at: t + ms, cb }),
        advance(ms: number) {
            const target = t + ms
            while (true) {
                const due = timers
                    .filter((x) => x.at <= target)
                    .sort((a, b) => a.at - b.at)[0]
                if (!due) break
                timers.splice(timers.indexOf(due), 1)
                t = due.at
                due.cb()
            }
            t = target
        },
    }
}

describe('knob rate limiting', () => {
    it('never exceeds 30 sends per second', () => {
        const clock = fakeClock()
        const sent: number[] = []
        const send = rateLimit((v: number) => sent.push(v), 34, clock.now, clock.schedule)
        for (let i = 0; i < 200; i++) {
            send(i)
            clock.advance(5) // a 200 Hz knob wiggle
        }
        clock.advance(100)
        expect(sent.length).toBeLessThanOrEqual(31)  // 1 second of wiggling
    })

    it('always delivers the final value', () => {
        const clock = fakeClock()
        const sent: number[] = []
        const send = rateLimit((v: number) => sent.push(v), 34, clock.now, clock.schedule)
        send(1)
        send(2)
        send(3)
        clock.advance(50)
        expect(sent[0]).toBe(1)
        expect(sent.at(-1)).toBe(3)
        expect(sent).toHaveLength(2)  // intermediate value collapsed away
    })

    it('sends immediately when idle', () => {
        const clock = fakeClock()
        const sent: number[] = []
        const send = rateLimit((v: number) => sent.push(v), 34, clock.now, clock.schedule)
        send(7)
        expect(sent).toEqual([7])
        clock.advance(100)
        send(8)
        expect(sent).toEqual([7, 8])
    })
})
