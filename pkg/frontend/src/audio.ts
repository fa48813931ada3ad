// Browser tone synthesis: one oscillator per held note, a softer triangle
// voice for q-notes.  All audio is local -- the server never streams sound.

const midiToHz = (note: number): number => 440 * 2 ** ((note - 69) / 12)

interface Voice {
    osc: OscillatorNode
    gain: GainNode
}

export class ToneEngine {
    private ctx: AudioContext | null = null
    private player = new Map<number, Voice>()
    private qvoice: Voice | null = null

    /** Lazily created on first use: browsers require a user gesture. */
    private context(): AudioContext | null {
        if (this.ctx) return this.ctx
        const Ctor = window.AudioContext
            ?? (window as unknown as { webkitAudioContext?: typeof AudioContext }).webkitAudioContext
        if (!Ctor) return null
        this.ctx = new Ctor()
        return this.ctx
    }

    private startVoice(note: number, vel: number, type: OscillatorType, level: number): Voice | null {
        const ctx = this.context()
        if (!ctx) return null
        if (ctx.state === 'suspended') void ctx.resume()
        const osc = ctx.createOscillator()
        const gain = ctx.createGain()
        osc.type = type
        osc.frequency.value = midiToHz(note)
        gain.gain.value = level * (vel / 127)
        osc.connect(gain).connect(ctx.destination)
        osc.start()
        return { osc, gain }
    }

    private stopVoice(voice: Voice | null): void {
        if (!voice || !this.ctx) return
        const t = this.ctx.currentTime
        voice.gain.gain.setTargetAtTime(0, t, 0.02)
        voice.osc.stop(t + 0.15)
    }

    playerOn(note: number, vel: number): void {
        this.playerOff(note)
        const voice = this.startVoice(note, vel, 'square', 0.12)
        if (voice) this.player.set(note, voice)
    }

    playerOff(note: number): void {
        const voice = this.player.get(note)
        if (voice) {
            this.stopVoice(voice)
            this.player.delete(note)
        }
    }

    qnoteOn(note: number, vel: number): void {
        this.qnoteOff()
        this.qvoice = this.startVoice(note, vel, 'triangle', 0.10)
    }

    qnoteOff(): void {
        this.stopVoice(this.qvoice)
        this.qvoice = null
    }

    silence(): void {
        for (const note of [...this.player.keys()]) this.playerOff(note)
        this.qnoteOff()
    }
}
