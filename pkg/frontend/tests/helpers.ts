// Shared DOM-measurement helpers for the test suites.

const CENTER = 110; // PIE_SIZE / 2

export function mount(html: string): HTMLElement {
  const host = document.createElement("div");
  host.innerHTML = html;
  return host;
}

/** Swept angle of one pie slice, degrees, recovered from its path data. */
export function sliceAngle(path: SVGPathElement): number {
  const d = path.getAttribute("d")!;
  const numbers = d.match(/-?\d+(?:\.\d+)?/g)!.map(Number);
  // M cx cy L x1 y1 A r r rot large sweep x2 y2 Z
  const [, , x1, y1, , , , large, , x2, y2] = numbers;
  const a1 = (Math.atan2(y1 - CENTER, x1 - CENTER) * 180) / Math.PI;
  const a2 = (Math.atan2(y2 - CENTER, x2 - CENTER) * 180) / Math.PI;
  let sweep = a2 - a1;
  if (sweep < 0) sweep += 360;
  if (large === 1 && sweep < 180) sweep += 360;
  return sweep;
}
