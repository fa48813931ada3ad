// Frame schema for the live service, with validation on both directions:
// nothing malformed ever goes down the socket, and unexpected server data
// is surfaced as an error instead of leaking into the UI state.

export type ClientFrame =
    | { t: 'noteOn'; note: number; vel: number }
    | { t: 'noteOff'; note: number }
    | { t: 'setS'; s: number }
    | { t: 'setGain'; g: number }
    | { t: 'patch' }

export type ServerFrame =
    | { t: 'qnote'; note: number; vel: number; ttlMs: number }
    | { t: 'probs'; p: number[] }
    | { t: 'qbyte'; v: number }
    | { t: 'sysex'; bytes: number[] }
    | { t: 'err'; msg: string }

const isInt = (v: unknown, lo: number, hi: number): v is number =>
    typeof v === 'number' && Number.isInteger(v) && v >= lo && v <= hi

const isFinite_ = (v: unknown): v is number =>
    typeof v === 'number' && Number.isFinite(v)

/** Returns an error description, or null when the frame is well-formed. */
export function validateClientFrame(frame: ClientFrame): string | null {
    switch (frame.t) {
        case 'noteOn':
            if (!isInt(frame.note, 0, 127)) return `noteOn.note out of range: ${frame.note}`
            if (!isInt(frame.vel, 1, 127)) return `noteOn.vel out of range: ${frame.vel}`
            return null
        case 'noteOff':
            return isInt(frame.note, 0, 127) ? null : `noteOff.note out of range: ${frame.note}`
        case 'setS':
            return isFinite_(frame.s) ? null : 'setS.s must be a finite number'
        case 'setGain':
            return isFinite_(frame.g) && frame.g >= 0 && frame.g <= 1
                ? null : `setGain.g out of 0..1: ${frame.g}`
        case 'patch':
            return null
        default:
            return `unknown frame type ${(frame as { t?: unknown }).t}`
    }
}

export function parseServerFrame(raw: string): ServerFrame | null {
    let data: unknown
    try {
        data = JSON.parse(raw)
    } catch {
        return null
    }
    if (typeof data !== 'object' || data === null) return null
    const frame = data as Record<string, unknown>
    switch (frame.t) {
        case 'qnote':
            if (isInt(frame.note, 0, 127) && isInt(frame.vel, 0, 127)
                && isFinite_(frame.ttlMs) && frame.ttlMs > 0) {
                return { t: 'qnote', note: frame.note, vel: frame.vel, ttlMs: frame.ttlMs }
            }
            return null
        case 'probs': {
            const p = frame.p
            if (Array.isArray(p) && p.length === 4 && p.every((x) => isFinite_(x) && x >= 0)) {
                return { t: 'probs', p: p as number[] }
            }
            return null
        }
        case 'qbyte':
            return isInt(frame.v, 0, 255) ? { t: 'qbyte', v: frame.v } : null
        case 'sysex': {
            const bytes = frame.bytes
            if (Array.isArray(bytes) && bytes.every((b) => isInt(b, 0, 255))) {
                return { t: 'sysex', bytes: bytes as number[] }
            }
            return null
        }
        case 'err':
            return typeof frame.msg === 'string' ? { t: 'err', msg: frame.msg } : null
        default:
            return null
    }
}

export const clampS = (s: number): number => Math.min(2, Math.max(0, s))
export const clampGain = (g: number): number => Math.min(1, Math.max(0, g))
