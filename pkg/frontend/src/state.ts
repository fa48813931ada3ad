// UI state and the reducer that folds server frames into it.

import type { ServerFrame } from './protocol'

export interface QnoteView {
    note: number
    vel: number
    untilMs: number
}

export interface UiState {
    connected: boolean
    s: number
    gain: number
    probs: number[]
    playerNotes: Set<number>
    qnote: QnoteView | null
    lastQbyte: number | null
    lastSysex: number[] | null
    log: string[]
}

const LOG_LIMIT = 50

export function initialState(): UiState {
    return {
        connected: false,
        s: 0,
        gain: 0.5,
        probs: [0.5, 0, 0, 0.5],
        playerNotes: new Set(),
        qnote: null,
        lastQbyte: null,
        lastSysex: null,
        log: [],
    }
}

export function pushLog(state: UiState, line: string): void {
    state.log.push(line)
    if (state.log.length > LOG_LIMIT) state.log.splice(0, state.log.length - LOG_LIMIT)
}

export function applyServerFrame(state: UiState, frame: ServerFrame, nowMs: number): void {
    switch (frame.t) {
        case 'probs':
            state.probs = frame.p
            break
        case 'qnote':
            state.qnote = { note: frame.note, vel: frame.vel, untilMs: nowMs + frame.ttlMs }
            pushLog(state, `q-note ${frame.note} vel ${frame.vel}`)
            break
        case 'qbyte':
            state.lastQbyte = frame.v
            break
        case 'sysex':
            state.lastSysex = frame.bytes
            pushLog(state, `patch SysEx: ${frame.bytes.length} bytes`)
            break
        case 'err':
            pushLog(state, `server error: ${frame.msg}`)
            break
    }
}

/** Drop the rendered q-note once its TTL has elapsed (client-side echo). */
export function expireQnote(state: UiState, nowMs: number): boolean {
    if (state.qnote !== null && nowMs >= state.qnote.untilMs) {
        state.qnote = null
        return true
    }
    return false
}

export function probsSum(state: UiState): number {
    return state.probs.reduce((a, b) => a + b, 0)
}
