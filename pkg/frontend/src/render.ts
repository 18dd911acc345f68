import type { ContourSet, FieldMarker, ScalarField2D } from "./types.js";
import type { PlotRange } from "./contours.js";

export interface PlotTransform {
  toPx(r: number, k: number): [number, number];
  toData(x: number, y: number): [number, number];
}

export function makeTransform(range: PlotRange, width: number, height: number): PlotTransform {
  const sx = width / (range.rmax - range.rmin);
  const sy = height / (range.kmax - range.kmin);
  return {
    toPx: (r, k) => [(r - range.rmin) * sx, height - (k - range.kmin) * sy],
    toData: (x, y) => [range.rmin + x / sx, range.kmin + (height - y) / sy],
  };
}

function heatColor(t: number): string {
  // 0 -> deep blue (optimal), 1 -> warm yellow (wasteful).
  const hue = 230 - 180 * Math.min(1, Math.max(0, t));
  return `hsl(${hue}, 75%, ${38 + 22 * t}%)`;
}

export function drawField(
  ctx: CanvasRenderingContext2D,
  field: ScalarField2D,
  range: PlotRange,
  width: number,
  height: number,
  maxValue = 2.0,
): void {
  const t = makeTransform(range, width, height);
  const nx = field.x.values.length;
  const ny = field.y.values.length;
  for (let i = 0; i < ny; i++) {
    const row = field.values[i]!;
    const k0 = field.y.values[i]!;
    const k1 = field.y.values[Math.min(i + 1, ny - 1)]!;
    for (let j = 0; j < nx; j++) {
      const r0 = field.x.values[j]!;
      const r1 = field.x.values[Math.min(j + 1, nx - 1)]!;
      const [x0, y1] = t.toPx(r0, k0);
      const [x1, y0] = t.toPx(r1, k1);
      ctx.fillStyle = heatColor((row[j]! - 1) / (maxValue - 1));
      ctx.fillRect(x0, y0, Math.ceil(x1 - x0) + 1, Math.ceil(y1 - y0) + 1);
    }
  }
}

export function drawContours(
  ctx: CanvasRenderingContext2D,
  contours: ContourSet,
  range: PlotRange,
  width: number,
  height: number,
): void {
  const t = makeTransform(range, width, height);
  ctx.lineWidth = 1.25;
  ctx.strokeStyle = "rgba(255,255,255,0.8)";
  ctx.fillStyle = "rgba(255,255,255,0.9)";
  ctx.font = "11px system-ui, sans-serif";
  contours.polylines.forEach((group, levelIdx) => {
    for (const poly of group) {
      if (poly.length < 2) continue;
      ctx.beginPath();
      poly.forEach(([r, k], i) => {
        const [x, y] = t.toPx(r, k);
        if (i === 0) ctx.moveTo(x, y);
        else ctx.lineTo(x, y);
      });
      ctx.stroke();
      const mid = poly[Math.floor(poly.length / 2)]!;
      const [lx, ly] = t.toPx(mid[0], mid[1]);
      ctx.fillText(String(contours.levels[levelIdx]!), lx + 3, ly - 3);
    }
  });
}

export function drawMarker(
  ctx: CanvasRenderingContext2D,
  marker: FieldMarker,
  range: PlotRange,
  width: number,
  height: number,
): void {
  const t = makeTransform(range, width, height);
  const [x, y] = t.toPx(marker.x, marker.y);
  ctx.fillStyle = "#e63946";
  ctx.beginPath();
  ctx.arc(x, y, 5, 0, Math.PI * 2);
  ctx.fill();
  ctx.strokeStyle = "white";
  ctx.lineWidth = 1.5;
  ctx.stroke();
}

export function drawUserPoint(
  ctx: CanvasRenderingContext2D,
  r: number,
  k: number,
  range: PlotRange,
  width: number,
  height: number,
): void {
  const t = makeTransform(range, width, height);
  const [x, y] = t.toPx(r, k);
  ctx.fillStyle = "#f4f1de";
  ctx.strokeStyle = "#1d3557";
  ctx.lineWidth = 2;
  ctx.beginPath();
  ctx.arc(x, y, 6, 0, Math.PI * 2);
  ctx.fill();
  ctx.stroke();
}
