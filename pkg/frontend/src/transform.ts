/** Screen <-> image coordinate mapping for pan and zoom.
 *
 * screen = image * zoom + pan.  The two directions are exact inverses, so
 * round-tripping a point must stay within a fraction of a pixel at any
 * zoom level.
 */

import type { Point } from "./types.js";

export const MIN_ZOOM = 0.05;
export const MAX_ZOOM = 64;

export class ViewTransform {
  zoom = 1;
  panX = 0;
  panY = 0;

  toScreen(image: Point): Point {
    return { x: image.x * this.zoom + this.panX, y: image.y * this.zoom + this.panY };
  }

  toImage(screen: Point): Point {
    return { x: (screen.x - this.panX) / this.zoom, y: (screen.y - this.panY) / this.zoom };
  }

  /** Rescale about a screen point: the image point under it does not move. */
  zoomAbout(screen: Point, factor: number): void {
    const anchor = this.toImage(screen);
    this.zoom = clampZoom(this.zoom * factor);
    this.panX = screen.x - anchor.x * this.zoom;
    this.panY = screen.y - anchor.y * this.zoom;
  }

  panBy(dx: number, dy: number): void {
    this.panX += dx;
    this.panY += dy;
  }

  reset(): void {
    this.zoom = 1;
    this.panX = 0;
    this.panY = 0;
  }
}

export function clampZoom(zoom: number): number {
  if (!Number.isFinite(zoom) || zoom <= 0) return MIN_ZOOM;
  return Math.min(MAX_ZOOM, Math.max(MIN_ZOOM, zoom));
}
