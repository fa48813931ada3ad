// Two-octave pointer keyboard with stylophone-style dragging: hold the
// pointer down and slide across keys to glide between notes.

export const LOW_NOTE = 60
export const HIGH_NOTE = 84  // inclusive; covers the full q-note shift range

const BLACK = new Set([1, 3, 6, 8, 10])
const NOTE_NAMES = ['C', 'C#', 'D', 'D#', 'E', 'F', 'F#', 'G', 'G#', 'A', 'A#', 'B']

export interface KeyboardHooks {
    onNoteOn(note: number): void
    onNoteOff(note: number): void
}

export function noteName(note: number): string {
    return `${NOTE_NAMES[note % 12]}${Math.floor(note / 12) - 1}`
}

export function renderKeyboard(container: HTMLElement, hooks: KeyboardHooks): void {
    container.innerHTML = ''
    let dragNote: number | null = null

    for (let note = LOW_NOTE; note <= HIGH_NOTE; note++) {
        const key = document.createElement('div')
        key.className = BLACK.has(note % 12) ? 'key black' : 'key white'
        key.dataset.note = String(note)
        key.title = noteName(note)

        key.addEventListener('pointerdown', (ev) => {
            ev.preventDefault()
            dragNote = note
            hooks.onNoteOn(note)
        })
        key.addEventListener('pointerenter', () => {
            if (dragNote !== null && dragNote !== note) {
                hooks.onNoteOff(dragNote)
                dragNote = note
                hooks.onNoteOn(note)
            }
        })
        container.appendChild(key)
    }

    const release = () => {
        if (dragNote !== null) {
            hooks.onNoteOff(dragNote)
            dragNote = null
        }
    }
    container.addEventListener('pointerup', release)
    container.addEventListener('pointerleave', release)
}

export function setKeyPressed(container: HTMLElement, note: number, on: boolean): void {
    keyFor(container, note)?.classList.toggle('pressed', on)
}

/** Highlight the q-note key; pass null to clear. */
export function setQnoteKey(container: HTMLElement, note: number | null): void {
    container.querySelectorAll('.key.qnote').forEach((el) => el.classList.remove('qnote'))
    if (note !== null) keyFor(container, note)?.classList.add('qnote')
}

function keyFor(container: HTMLElement, note: number): HTMLElement | null {
    return container.querySelector<HTMLElement>(`.key[data-note="${note}"]`)
}
