// Wiring: socket, keyboard, knobs, bars, log.

import { ToneEngine } from './audio'
import { barHeights, renderBars, updateBars } from './bars'
import { rateLimit } from './debounce'
import { renderKeyboard, setKeyPressed, setQnoteKey } from './keyboard'
import {
    clampGain,
    clampS,
    parseServerFrame,
    validateClientFrame,
    type ClientFrame,
} from './protocol'
import { applyServerFrame, expireQnote, initialState, probsSum, pushLog } from './state'

const KNOB_SEND_INTERVAL_MS = 34 // <= 30 frames/second

function el<T extends HTMLElement>(id: string): T {
    const node = document.getElementById(id)
    if (!node) throw new Error(`missing element #${id}`)
    return node as T
}

export function serverUrl(): string {
    const override = new URLSearchParams(window.location.search).get('server')
    if (override) return override
    return `ws://${window.location.hostname || '127.0.0.1'}:8765`
}

export function startApp(): void {
    const state = initialState()
    const tones = new ToneEngine()

    const banner = el<HTMLElement>('banner')
    const barsBox = el<HTMLElement>('bars')
    const keysBox = el<HTMLElement>('keyboard')
    const logBox = el<HTMLElement>('log')
    const sKnob = el<HTMLInputElement>('knob-s')
    const sReadout = el<HTMLElement>('readout-s')
    const gainKnob = el<HTMLInputElement>('knob-gain')
    const gainReadout = el<HTMLElement>('readout-gain')
    const qbyteBox = el<HTMLElement>('qbyte')
    const patchButton = el<HTMLButtonElement>('patch-button')
    const sumBox = el<HTMLElement>('probs-sum')

    renderBars(barsBox)
    updateBars(barsBox, state.probs)

    let socket: WebSocket | null = null

    const send = (frame: ClientFrame): void => {
        const problem = validateClientFrame(frame)
        if (problem) {
            pushLog(state, `blocked malformed frame: ${problem}`)
            renderLog()
            return
        }
        if (socket && socket.readyState === WebSocket.OPEN) {
            socket.send(JSON.stringify(frame))
        }
    }

    const sendS = rateLimit((s: number) => send({ t: 'setS', s }), KNOB_SEND_INTERVAL_MS)
    const sendGain = rateLimit((g: number) => send({ t: 'setGain', g }), KNOB_SEND_INTERVAL_MS)

    const renderLog = (): void => {
        logBox.textContent = state.log.slice(-12).join('\n')
        logBox.scrollTop = logBox.scrollHeight
    }

    const setConnected = (up: boolean): void => {
        state.connected = up
        banner.classList.toggle('hidden', up)
        for (const input of [sKnob, gainKnob, patchButton]) input.disabled = !up
        keysBox.classList.toggle('disabled', !up)
        if (!up) tones.silence()
    }

    renderKeyboard(keysBox, {
        onNoteOn: (note) => {
            if (!state.connected) return
            state.playerNotes.add(note)
            setKeyPressed(keysBox, note, true)
            tones.playerOn(note, 96)
            send({ t: 'noteOn', note, vel: 96 })
        },
        onNoteOff: (note) => {
            if (!state.playerNotes.delete(note)) return
            setKeyPressed(keysBox, note, false)
            tones.playerOff(note)
            send({ t: 'noteOff', note })
        },
    })

    sKnob.addEventListener('input', () => {
        state.s = clampS(Number(sKnob.value))
        sReadout.textContent = state.s.toFixed(2)
        sendS(state.s)
    })
    gainKnob.addEventListener('input', () => {
        state.gain = clampGain(Number(gainKnob.value))
        gainReadout.textContent = state.gain.toFixed(2)
        sendGain(state.gain)
    })
    patchButton.addEventListener('click', () => send({ t: 'patch' }))

    window.setInterval(() => {
        if (expireQnote(state, performance.now())) {
            setQnoteKey(keysBox, null)
            tones.qnoteOff()
        }
    }, 50)

    const connect = (): void => {
        socket = new WebSocket(serverUrl())
        socket.onopen = () => {
            setConnected(true)
            pushLog(state, `connected to ${serverUrl()}`)
            renderLog()
            sendS(state.s)
        }
        socket.onclose = () => {
            setConnected(false)
            pushLog(state, 'disconnected; retrying in 2s')
            renderLog()
            window.setTimeout(connect, 2000)
        }
        socket.onmessage = (event) => {
            const frame = parseServerFrame(String(event.data))
            if (!frame) {
                pushLog(state, `unparseable server frame: ${event.data}`)
                renderLog()
                return
            }
            applyServerFrame(state, frame, performance.now())
            if (frame.t === 'probs') {
                updateBars(barsBox, state.probs)
                sumBox.textContent = `sum ${probsSum(state).toFixed(2)}`
                console.assert(Math.abs(barHeights(barsBox).reduce((a, b) => a + b, 0) - 100)
                    <= 1, 'bar heights drifted from the received distribution')
            } else if (frame.t === 'qnote') {
                setQnoteKey(keysBox, frame.note)
                tones.qnoteOn(frame.note, frame.vel)
            } else if (frame.t === 'qbyte') {
                qbyteBox.textContent = `0x${frame.v.toString(16).padStart(2, '0').toUpperCase()}`
            }
            renderLog()
        }
    }

    setConnected(false)
    connect()
}

if (typeof document !== 'undefined' && document.getElementById('keyboard')) {
    startApp()
}
