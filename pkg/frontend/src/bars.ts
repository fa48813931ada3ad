// Probability bar chart: four bars, one per 2-qubit outcome.

const OUTCOME_LABELS = ['00', '01', '10', '11']

export function renderBars(container: HTMLElement): void {
    container.innerHTML = ''
    for (const label of OUTCOME_LABELS) {
        const wrap = document.createElement('div')
        wrap.className = 'bar-wrap'
        const bar = document.createElement('div')
        bar.className = 'bar'
        bar.dataset.outcome = label
        bar.style.height = '0%'
        const value = document.createElement('span')
        value.className = 'bar-value'
        const name = document.createElement('span')
        name.className = 'bar-label'
        name.textContent = label
        wrap.append(value, bar, name)
        container.appendChild(wrap)
    }
}

export function updateBars(container: HTMLElement, probs: number[]): void {
    const bars = container.querySelectorAll<HTMLElement>('.bar')
    const values = container.querySelectorAll<HTMLElement>('.bar-value')
    bars.forEach((bar, i) => {
        const p = probs[i] ?? 0
        bar.style.height = `${(p * 100).toFixed(1)}%`
        values[i].textContent = p.toFixed(2)
    })
}

export function barHeights(container: HTMLElement): number[] {
    return Array.from(container.querySelectorAll<HTMLElement>('.bar'))
        .map((bar) => parseFloat(bar.style.height))
}
